#include "masked_subgraph.hpp"

namespace selcon::detail {

MaskedSubgraph::MaskedSubgraph(const Graph& g) : rows_(g.vertex_count(), Bits(g.vertex_count())) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId w : g.neighbors(u)) {
            rows_[u].set(w);
        }
    }
}

Bits MaskedSubgraph::full_set() const {
    Bits all(rows_.size());
    all.set();
    return all;
}

MaskedSubgraph::Scratch MaskedSubgraph::make_scratch() const {
    Scratch s;
    s.visited.resize(rows_.size());
    s.frontier.resize(rows_.size());
    s.next.resize(rows_.size());
    return s;
}

DistanceProfile MaskedSubgraph::profile(const Bits& alive, Scratch& scratch) const {
    DistanceProfile out(alive.count());
    auto& visited = scratch.visited;
    auto& frontier = scratch.frontier;
    auto& next = scratch.next;
    for (auto s = alive.find_first(); s != Bits::npos; s = alive.find_next(s)) {
        visited.reset();
        frontier.reset();
        visited.set(s);
        frontier.set(s);
        for (Distance d = 1;; ++d) {
            next.reset();
            for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v)) {
                next |= rows_[v];
            }
            next &= alive;
            next -= visited;
            const auto reached = next.count();
            if (reached == 0) {
                break;
            }
            out.add(d, reached);
            visited |= next;
            frontier.swap(next);
        }
    }
    return out;
}

void MaskedSubgraph::reach(const Bits& alive, VertexId source, Scratch& scratch, Bits& out) const {
    out.resize(rows_.size());
    out.reset();
    auto& frontier = scratch.frontier;
    auto& next = scratch.next;
    frontier.reset();
    frontier.set(source);
    out.set(source);
    while (frontier.any()) {
        next.reset();
        for (auto v = frontier.find_first(); v != Bits::npos; v = frontier.find_next(v)) {
            next |= rows_[v];
        }
        next &= alive;
        next -= out;
        out |= next;
        frontier.swap(next);
    }
}

std::vector<Bits> MaskedSubgraph::components(const Bits& alive, Scratch& scratch) const {
    std::vector<Bits> out;
    Bits remaining = alive;
    for (auto s = remaining.find_first(); s != Bits::npos; s = remaining.find_first()) {
        Bits comp;
        reach(alive, static_cast<VertexId>(s), scratch, comp);
        remaining -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace selcon::detail
