#include "jkres/models.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace jkres {

LinearSystem kostant_system(int ell) {
    if (ell < 1) throw Error(ErrorCode::BadInput, "rank must be at least 1");
    std::vector<IntVec> betas;
    for (int len = 0; len < ell; ++len) {
        for (int i = 0; i + len < ell; ++i) {
            IntVec root(ell, 0);
            for (int k = i; k <= i + len; ++k) root[k] = 1;
            betas.push_back(std::move(root));
        }
    }
    return new_system(betas);
}

LinearSystem transportation_system(int k, int ell) {
    if (k < 1 || ell < 1) throw Error(ErrorCode::BadInput, "sides must be at least 1");
    int r = k + ell - 1;
    std::vector<IntVec> betas;
    betas.reserve(static_cast<size_t>(k) * ell);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < ell; ++j) {
            IntVec b(r, 0);
            b[i] = 1;
            if (j + 1 < ell) b[k + j] = 1;
            betas.push_back(std::move(b));
        }
    }
    return new_system(betas);
}

IntVec margins_to_xi(const IntVec& rows, const IntVec& cols) {
    if (rows.empty() || cols.empty())
        throw Error(ErrorCode::BadInput, "margins must be nonempty");
    for (const Int& v : rows)
        if (v < 0) throw Error(ErrorCode::BadInput, "negative row margin");
    for (const Int& v : cols)
        if (v < 0) throw Error(ErrorCode::BadInput, "negative column margin");
    Int rs = std::accumulate(rows.begin(), rows.end(), Int(0));
    Int cs = std::accumulate(cols.begin(), cols.end(), Int(0));
    if (rs != cs)
        throw Error(ErrorCode::MarginMismatch, "row sum " + int_to_string(rs) +
                                                   " != column sum " + int_to_string(cs));
    IntVec xi;
    xi.reserve(rows.size() + cols.size() - 1);
    for (const Int& v : rows) xi.push_back(v);
    for (size_t j = 0; j + 1 < cols.size(); ++j) xi.push_back(cols[j]);
    return xi;
}

LinearSystem network_system(const std::vector<std::pair<int, int>>& arcs) {
    if (arcs.empty()) throw Error(ErrorCode::BadInput, "no arcs");
    std::vector<int> vertices;
    for (const auto& [u, v] : arcs) {
        vertices.push_back(u);
        vertices.push_back(v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::map<int, int> index;
    for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);

    // Undirected connectivity.
    int nv = static_cast<int>(vertices.size());
    std::vector<std::vector<int>> adj(nv);
    for (const auto& [u, v] : arcs) {
        adj[index[u]].push_back(index[v]);
        adj[index[v]].push_back(index[u]);
    }
    std::vector<bool> seen(nv, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int at = stack.back();
        stack.pop_back();
        for (int next : adj[at])
            if (!seen[next]) {
                seen[next] = true;
                stack.push_back(next);
            }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw Error(ErrorCode::Disconnected, "digraph is not connected");

    // Incidence columns with the last vertex's coordinate dropped.
    int r = nv - 1;
    if (r < 1) throw Error(ErrorCode::BadInput, "need at least two vertices");
    std::vector<IntVec> betas;
    betas.reserve(arcs.size());
    for (const auto& [u, v] : arcs) {
        IntVec b(r, 0);
        int ui = index[u], vi = index[v];
        if (ui < r) b[ui] += 1;
        if (vi < r) b[vi] -= 1;
        betas.push_back(std::move(b));
    }
    return new_system(betas);
}

} // namespace jkres
