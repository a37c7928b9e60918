#include "netform/eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace netform {

namespace {
inline int word_count(int n) { return (n + 63) / 64; }
inline bool get_bit(const std::uint64_t* row, int i) {
    return (row[i >> 6] >> (i & 63)) & 1ull;
}
inline void set_bit(std::uint64_t* row, int i) { row[i >> 6] |= 1ull << (i & 63); }
inline void clear_bit(std::uint64_t* row, int i) { row[i >> 6] &= ~(1ull << (i & 63)); }
}  // namespace

Evaluator::Evaluator(const GameState& state, AdversaryKind kind)
    : n_(state.n()),
      words_(word_count(state.n())),
      c_(state.edge_cost()),
      b_(state.immunization_cost()),
      kind_(kind) {
    purchases_.resize(n_);
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
    reverse_rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
    base_imm_.assign(words_, 0);
    for (int i = 0; i < n_; ++i) {
        purchases_[i] = state.strategy(i).purchases;
        if (state.immunized(i)) set_bit(base_imm_.data(), i);
        for (int t : purchases_[i]) {
            set_bit(&rows_[static_cast<std::size_t>(i) * words_], t);
            set_bit(&rows_[static_cast<std::size_t>(t) * words_], i);
            set_bit(&reverse_rows_[static_cast<std::size_t>(t) * words_], i);
        }
    }
    actor_row_saved_.assign(words_, 0);
    vuln_.assign(words_, 0);
    seen_.assign(words_, 0);
    frontier_.assign(words_, 0);
    next_.assign(words_, 0);
    region_of_.assign(n_, -1);
    imm_index_.assign(n_, -1);
    touched_.reserve(n_);
    node_weight_.reserve(n_);
    region_size_.reserve(n_);
    order_.reserve(n_);
}

void Evaluator::set_actor(int actor) {
    if (actor_ == actor) return;
    if (actor_ >= 0) {
        // restore the full graph for the previous actor
        std::uint64_t* row = &rows_[static_cast<std::size_t>(actor_) * words_];
        std::copy(reverse_rows_.begin() + static_cast<std::size_t>(actor_) * words_,
                  reverse_rows_.begin() + static_cast<std::size_t>(actor_ + 1) * words_, row);
        for (int t : purchases_[actor_]) {
            set_bit(row, t);
            set_bit(&rows_[static_cast<std::size_t>(t) * words_], actor_);
        }
    }
    actor_ = actor;
    if (actor_ < 0) return;
    // strip the actor's own purchases; edges bought by the other side remain
    std::uint64_t* row = &rows_[static_cast<std::size_t>(actor_) * words_];
    std::copy(reverse_rows_.begin() + static_cast<std::size_t>(actor_) * words_,
              reverse_rows_.begin() + static_cast<std::size_t>(actor_ + 1) * words_, row);
    for (int t : purchases_[actor_]) {
        if (!get_bit(&reverse_rows_[static_cast<std::size_t>(actor_) * words_], t))
            clear_bit(&rows_[static_cast<std::size_t>(t) * words_], actor_);
    }
}

ExactUtility Evaluator::evaluate(int actor, const std::vector<int>& targets, bool immunized) {
    set_actor(actor);
    std::uint64_t* row = &rows_[static_cast<std::size_t>(actor) * words_];
    touched_.clear();
    for (int t : targets) {
        set_bit(row, t);
        std::uint64_t* trow = &rows_[static_cast<std::size_t>(t) * words_];
        if (!get_bit(trow, actor)) {
            set_bit(trow, actor);
            touched_.push_back(t);
        }
    }
    ExactUtility u = run(actor, static_cast<int>(targets.size()), immunized);
    for (int t : touched_) clear_bit(&rows_[static_cast<std::size_t>(t) * words_], actor);
    std::copy(reverse_rows_.begin() + static_cast<std::size_t>(actor) * words_,
              reverse_rows_.begin() + static_cast<std::size_t>(actor + 1) * words_, row);
    return u;
}

ExactUtility Evaluator::evaluate(int actor, const PlayerStrategy& strat) {
    return evaluate(actor, strat.purchases, strat.immunized);
}

ExactUtility Evaluator::evaluate_mask(int actor, std::uint64_t target_mask, bool immunized) {
    int targets[64];
    int m = 0;
    std::uint64_t bits = target_mask;
    while (bits) {
        targets[m++] = __builtin_ctzll(bits);
        bits &= bits - 1;
    }
    set_actor(actor);
    std::uint64_t* row = &rows_[static_cast<std::size_t>(actor) * words_];
    touched_.clear();
    for (int i = 0; i < m; ++i) {
        const int t = targets[i];
        set_bit(row, t);
        std::uint64_t* trow = &rows_[static_cast<std::size_t>(t) * words_];
        if (!get_bit(trow, actor)) {
            set_bit(trow, actor);
            touched_.push_back(t);
        }
    }
    ExactUtility u = run(actor, m, immunized);
    for (int t : touched_) clear_bit(&rows_[static_cast<std::size_t>(t) * words_], actor);
    std::copy(reverse_rows_.begin() + static_cast<std::size_t>(actor) * words_,
              reverse_rows_.begin() + static_cast<std::size_t>(actor + 1) * words_, row);
    return u;
}

ExactUtility Evaluator::evaluate_current(int actor) {
    return evaluate(actor, purchases_[actor], get_bit(base_imm_.data(), actor));
}

ExactUtility Evaluator::run(int actor, int target_count, bool immunized) {
    // vulnerability mask with the actor's immunization override
    for (int w = 0; w < words_; ++w) vuln_[w] = ~base_imm_[w];
    if (immunized)
        clear_bit(vuln_.data(), actor);
    else
        set_bit(vuln_.data(), actor);
    if (n_ & 63) vuln_[words_ - 1] &= (1ull << (n_ & 63)) - 1;

    // label vulnerable regions in ascending min-vertex order
    std::fill(region_of_.begin(), region_of_.end(), -1);
    region_size_.clear();
    for (int w = 0; w < words_; ++w) seen_[w] = ~vuln_[w];
    int vulnerable_total = 0;
    for (int v = 0; v < n_; ++v) {
        if (!get_bit(vuln_.data(), v) || region_of_[v] >= 0) continue;
        const int r = static_cast<int>(region_size_.size());
        int size = 0;
        std::fill(frontier_.begin(), frontier_.end(), 0);
        set_bit(frontier_.data(), v);
        set_bit(seen_.data(), v);
        while (true) {
            bool any = false;
            std::fill(next_.begin(), next_.end(), 0);
            for (int w = 0; w < words_; ++w) {
                std::uint64_t bits = frontier_[w];
                while (bits) {
                    const int u = (w << 6) + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    region_of_[u] = r;
                    ++size;
                    const std::uint64_t* urow = &rows_[static_cast<std::size_t>(u) * words_];
                    for (int x = 0; x < words_; ++x) next_[x] |= urow[x];
                }
            }
            for (int w = 0; w < words_; ++w) {
                next_[w] &= ~seen_[w];
                seen_[w] |= next_[w];
                if (next_[w]) any = true;
            }
            if (!any) break;
            std::swap(frontier_, next_);
        }
        region_size_.push_back(size);
        vulnerable_total += size;
    }
    const int num_regions = static_cast<int>(region_size_.size());

    // abstract node numbering: immunized vertices first, then regions
    int num_imm = 0;
    for (int v = 0; v < n_; ++v)
        imm_index_[v] = get_bit(vuln_.data(), v) ? -1 : num_imm++;
    const int nodes = num_imm + num_regions;
    node_weight_.assign(nodes, 1);
    for (int r = 0; r < num_regions; ++r) node_weight_[num_imm + r] = region_size_[r];
    auto anode = [&](int v) {
        return imm_index_[v] >= 0 ? imm_index_[v] : num_imm + region_of_[v];
    };

    // abstract multigraph in CSR form (parallel edges preserved)
    edge_u_.clear();
    edge_v_.clear();
    node_deg_.assign(nodes, 0);
    for (int v = 0; v < n_; ++v) {
        const std::uint64_t* vrow = &rows_[static_cast<std::size_t>(v) * words_];
        for (int w = v >> 6; w < words_; ++w) {
            std::uint64_t bits = vrow[w];
            if (w == (v >> 6)) bits &= ~((2ull << (v & 63)) - 1);  // keep u > v
            while (bits) {
                const int u = (w << 6) + __builtin_ctzll(bits);
                bits &= bits - 1;
                const int x = anode(v), y = anode(u);
                if (x == y) continue;  // intra-region edge
                edge_u_.push_back(x);
                edge_v_.push_back(y);
                ++node_deg_[x];
                ++node_deg_[y];
            }
        }
    }
    const int num_edges = static_cast<int>(edge_u_.size());
    adj_off_.assign(nodes + 1, 0);
    for (int x = 0; x < nodes; ++x) adj_off_[x + 1] = adj_off_[x] + node_deg_[x];
    adj_nbr_.resize(num_edges * 2);
    adj_eid_.resize(num_edges * 2);
    {
        std::vector<int>& fill = node_deg_;  // reuse as cursor
        for (int x = 0; x < nodes; ++x) fill[x] = adj_off_[x];
        for (int e = 0; e < num_edges; ++e) {
            adj_nbr_[fill[edge_u_[e]]] = edge_v_[e];
            adj_eid_[fill[edge_u_[e]]++] = e;
            adj_nbr_[fill[edge_v_[e]]] = edge_u_[e];
            adj_eid_[fill[edge_v_[e]]++] = e;
        }
    }

    // cut-vertex DFS over every component; actor's component is rooted at the
    // actor so that "rest of component" always means the actor's side
    const int actor_node = anode(actor);
    comp_of_node_.assign(nodes, -1);
    comp_weight_.clear();
    sep_weight_.assign(nodes, 0);
    sep_sq_.assign(nodes, 0);
    dfs_disc_.assign(nodes, -1);
    dfs_low_.assign(nodes, 0);
    dfs_parent_edge_.assign(nodes, -1);
    dfs_sub_.assign(nodes, 0);
    stack_node_.resize(nodes);
    stack_ptr_.resize(nodes);
    order_.clear();
    order_.push_back(actor_node);
    for (int x = 0; x < nodes; ++x)
        if (x != actor_node) order_.push_back(x);

    int time = 0;
    for (int root : order_) {
        if (dfs_disc_[root] >= 0) continue;
        const int comp_id = static_cast<int>(comp_weight_.size());
        std::int64_t weight_sum = 0;
        int sp = 0;
        stack_node_[sp] = root;
        stack_ptr_[sp] = adj_off_[root];
        dfs_disc_[root] = dfs_low_[root] = time++;
        dfs_sub_[root] = node_weight_[root];
        dfs_parent_edge_[root] = -1;
        comp_of_node_[root] = comp_id;
        weight_sum += node_weight_[root];
        while (sp >= 0) {
            const int u = stack_node_[sp];
            if (stack_ptr_[sp] < adj_off_[u + 1]) {
                const int idx = stack_ptr_[sp]++;
                const int v = adj_nbr_[idx];
                const int eid = adj_eid_[idx];
                if (eid == dfs_parent_edge_[u]) continue;
                if (dfs_disc_[v] < 0) {
                    dfs_disc_[v] = dfs_low_[v] = time++;
                    dfs_sub_[v] = node_weight_[v];
                    dfs_parent_edge_[v] = eid;
                    comp_of_node_[v] = comp_id;
                    weight_sum += node_weight_[v];
                    ++sp;
                    stack_node_[sp] = v;
                    stack_ptr_[sp] = adj_off_[v];
                } else {
                    dfs_low_[u] = std::min(dfs_low_[u], dfs_disc_[v]);
                }
            } else {
                --sp;
                if (sp >= 0) {
                    const int p = stack_node_[sp];
                    dfs_low_[p] = std::min(dfs_low_[p], dfs_low_[u]);
                    dfs_sub_[p] += dfs_sub_[u];
                    if (dfs_low_[u] >= dfs_disc_[p]) {
                        sep_weight_[p] += dfs_sub_[u];
                        sep_sq_[p] += dfs_sub_[u] * dfs_sub_[u];
                    }
                }
            }
        }
        comp_weight_.push_back(weight_sum);
    }

    const std::int64_t actor_comp_weight = comp_weight_[comp_of_node_[actor_node]];
    ExactUtility out;
    out.purchase_count = target_count;
    out.immunized = immunized;

    if (vulnerable_total == 0) {
        out.benefit_num = actor_comp_weight;
        out.benefit_den = 1;
        return out;
    }

    // component size of the actor once abstract node x is removed
    auto cc_after_removal = [&](int x) -> std::int64_t {
        if (x == actor_node) return 0;
        if (comp_of_node_[x] != comp_of_node_[actor_node]) return actor_comp_weight;
        return comp_weight_[comp_of_node_[x]] - node_weight_[x] - sep_weight_[x];
    };

    std::int64_t den = 0;
    std::int64_t num = 0;
    switch (kind_) {
        case AdversaryKind::MaxCarnage: {
            int max_size = 0;
            for (int r = 0; r < num_regions; ++r) max_size = std::max(max_size, region_size_[r]);
            for (int r = 0; r < num_regions; ++r)
                if (region_size_[r] == max_size) {
                    ++den;
                    num += cc_after_removal(num_imm + r);
                }
            break;
        }
        case AdversaryKind::RandomAttack: {
            for (int r = 0; r < num_regions; ++r) {
                den += region_size_[r];
                num += region_size_[r] * cc_after_removal(num_imm + r);
            }
            break;
        }
        case AdversaryKind::MaxDisruption: {
            std::int64_t total_sq = 0;
            for (std::int64_t wgt : comp_weight_) total_sq += wgt * wgt;
            region_sq_.assign(num_regions, 0);
            std::int64_t best = -1;
            for (int r = 0; r < num_regions; ++r) {
                const int x = num_imm + r;
                const std::int64_t wc = comp_weight_[comp_of_node_[x]];
                const std::int64_t rest = wc - node_weight_[x] - sep_weight_[x];
                region_sq_[r] = total_sq - wc * wc + rest * rest + sep_sq_[x];
                if (best < 0 || region_sq_[r] < best) best = region_sq_[r];
            }
            for (int r = 0; r < num_regions; ++r)
                if (region_sq_[r] == best) {
                    ++den;
                    num += cc_after_removal(num_imm + r);
                }
            break;
        }
    }
    out.benefit_num = num;
    out.benefit_den = den;
    return out;
}

}  // namespace netform
