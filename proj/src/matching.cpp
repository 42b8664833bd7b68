#include "pcov/matching.hpp"

#include "pcov/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace pcov {

namespace {

// Primal-dual blossom algorithm for maximum-weight (not necessarily
// maximum-cardinality) matching, after Galil's O(n^3) formulation.
// Edge endpoints are indexed as 2k / 2k+1 for edge k so that p^1 is the
// opposite endpoint. Blossoms occupy ids n..2n-1. With integer weights
// every dual value and slack stays integral throughout.
class Blossom {
public:
    Blossom(int n, const std::vector<std::array<long long, 3>>& edge_list)
        : n_(n), edges_(edge_list), m_(static_cast<int>(edge_list.size())) {
        endpoint_.resize(2 * m_);
        neighbend_.assign(n_, {});
        long long maxweight = 0;
        for (int k = 0; k < m_; ++k) {
            endpoint_[2 * k] = static_cast<int>(edges_[k][0]);
            endpoint_[2 * k + 1] = static_cast<int>(edges_[k][1]);
            neighbend_[edges_[k][0]].push_back(2 * k + 1);
            neighbend_[edges_[k][1]].push_back(2 * k);
            maxweight = std::max(maxweight, edges_[k][2]);
        }
        mate_.assign(n_, -1);
        label_.assign(2 * n_, 0);
        labelend_.assign(2 * n_, -1);
        inblossom_.resize(n_);
        std::iota(inblossom_.begin(), inblossom_.end(), 0);
        blossomparent_.assign(2 * n_, -1);
        blossomchilds_.assign(2 * n_, {});
        blossombase_.assign(2 * n_, -1);
        for (int v = 0; v < n_; ++v) blossombase_[v] = v;
        blossomendps_.assign(2 * n_, {});
        bestedge_.assign(2 * n_, -1);
        blossombestedges_.assign(2 * n_, {});
        has_bestedges_.assign(2 * n_, 0);
        for (int b = n_; b < 2 * n_; ++b) unusedblossoms_.push_back(b);
        dualvar_.assign(2 * n_, 0);
        for (int v = 0; v < n_; ++v) dualvar_[v] = maxweight;
        allowedge_.assign(m_, 0);
    }

    std::vector<int> solve() {
        for (int stage = 0; stage < n_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n_; b < 2 * n_; ++b) {
                blossombestedges_[b].clear();
                has_bestedges_[b] = 0;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();
            for (int v = 0; v < n_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    assert(label_[inblossom_[v]] == 1);
                    for (int p : neighbend_[v]) {
                        int k = p / 2;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        long long kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge_[k] = 1;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b]))
                                bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w]))
                                bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                // Dual adjustment.
                int deltatype = 1;
                long long delta = 0;
                int deltaedge = -1;
                int deltablossom = -1;
                {
                    long long mindual = dualvar_[0];
                    for (int v = 1; v < n_; ++v) mindual = std::min(mindual, dualvar_[v]);
                    delta = std::max(0LL, mindual);
                }
                for (int v = 0; v < n_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        long long d = slack(bestedge_[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * n_; ++b) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        long long kslack = slack(bestedge_[b]);
                        assert(kslack % 2 == 0);
                        long long d = kslack / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        dualvar_[b] < delta) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }

                for (int v = 0; v < n_; ++v) {
                    if (label_[inblossom_[v]] == 1) dualvar_[v] -= delta;
                    else if (label_[inblossom_[v]] == 2) dualvar_[v] += delta;
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) dualvar_[b] += delta;
                        else if (label_[b] == 2) dualvar_[b] -= delta;
                    }
                }

                if (deltatype == 1) break; // optimum reached
                if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    int i = static_cast<int>(edges_[deltaedge][0]);
                    int j = static_cast<int>(edges_[deltaedge][1]);
                    if (label_[inblossom_[i]] == 0) std::swap(i, j);
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    int i = static_cast<int>(edges_[deltaedge][0]);
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;

            for (int b = n_; b < 2 * n_; ++b)
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
                    dualvar_[b] == 0)
                    expand_blossom(b, true);
        }

        std::vector<int> mate(n_, -1);
        for (int v = 0; v < n_; ++v)
            if (mate_[v] >= 0) mate[v] = endpoint_[mate_[v]];
        for (int v = 0; v < n_; ++v) assert(mate[v] == -1 || mate[mate[v]] == v);
        return mate;
    }

private:
    long long slack(int k) const {
        return dualvar_[edges_[k][0]] + dualvar_[edges_[k][1]] - 2 * edges_[k][2];
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < n_) {
            out.push_back(b);
        } else {
            for (int t : blossomchilds_[b]) blossom_leaves(t, out);
        }
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        assert(label_[w] == 0 && label_[b] == 0);
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            blossom_leaves(b, queue_);
        } else {
            int base = blossombase_[b];
            assert(mate_[base] >= 0);
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    // Trace back from both endpoints of an S-S edge; returns the base of
    // the lowest common blossom ancestor, or -1 if the paths reach two
    // different roots (an augmenting path exists).
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            assert(label_[b] == 1);
            path.push_back(b);
            label_[b] = 5;
            assert(labelend_[b] == mate_[blossombase_[b]]);
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                assert(label_[b] == 2);
                assert(labelend_[b] >= 0);
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = static_cast<int>(edges_[k][0]);
        int w = static_cast<int>(edges_[k][1]);
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        int b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<int> path;
        std::vector<int> endps;
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            assert(label_[bv] == 2 ||
                   (label_[bv] == 1 && labelend_[bv] == mate_[blossombase_[bv]]));
            assert(labelend_[bv] >= 0);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            assert(label_[bw] == 2 ||
                   (label_[bw] == 1 && labelend_[bw] == mate_[blossombase_[bw]]));
            assert(labelend_[bw] >= 0);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        blossomchilds_[b] = std::move(path);
        blossomendps_[b] = std::move(endps);
        assert(label_[bb] == 1);
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int leaf : leaves) {
            if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }
        // Merge best-edge lists of the sub-blossoms.
        std::vector<int> bestedgeto(2 * n_, -1);
        for (int child : blossomchilds_[b]) {
            std::vector<int> nblist;
            if (!has_bestedges_[child]) {
                std::vector<int> child_leaves;
                blossom_leaves(child, child_leaves);
                for (int leaf : child_leaves)
                    for (int p : neighbend_[leaf]) nblist.push_back(p / 2);
            } else {
                nblist = blossombestedges_[child];
            }
            for (int ek : nblist) {
                int i = static_cast<int>(edges_[ek][0]);
                int j = static_cast<int>(edges_[ek][1]);
                if (inblossom_[j] == b) std::swap(i, j);
                int bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 &&
                    (bestedgeto[bj] == -1 || slack(ek) < slack(bestedgeto[bj])))
                    bestedgeto[bj] = ek;
            }
            blossombestedges_[child].clear();
            has_bestedges_[child] = 0;
            bestedge_[child] = -1;
        }
        blossombestedges_[b].clear();
        for (int ek : bestedgeto)
            if (ek != -1) blossombestedges_[b].push_back(ek);
        has_bestedges_[b] = 1;
        bestedge_[b] = -1;
        for (int ek : blossombestedges_[b])
            if (bestedge_[b] == -1 || slack(ek) < slack(bestedge_[b])) bestedge_[b] = ek;
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds_[b]) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                blossom_leaves(s, leaves);
                for (int v : leaves) inblossom_[v] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            // Relabel along the blossom cycle from the entry child.
            assert(labelend_[b] >= 0);
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int len = static_cast<int>(blossomchilds_[b].size());
            int j = 0;
            while (blossomchilds_[b][j] != entrychild) ++j;
            int jstep;
            int endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            auto child = [&](int idx) { return blossomchilds_[b][((idx % len) + len) % len]; };
            auto endp = [&](int idx) { return blossomendps_[b][((idx % len) + len) % len]; };
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[endp(j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[endp(j - endptrick) / 2] = 1;
                j += jstep;
                p = endp(j - endptrick) ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            int bv = child(j);
            label_[endpoint_[p ^ 1]] = 2;
            label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = p;
            labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (child(j) != entrychild) {
                bv = child(j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> leaves;
                blossom_leaves(bv, leaves);
                int labelled = -1;
                for (int v : leaves)
                    if (label_[v] != 0) {
                        labelled = v;
                        break;
                    }
                if (labelled != -1) {
                    assert(label_[labelled] == 2);
                    assert(inblossom_[labelled] == bv);
                    label_[labelled] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(labelled, 2, labelend_[labelled]);
                }
                j += jstep;
            }
        }
        label_[b] = -1;
        labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
        bestedge_[b] = -1;
        unusedblossoms_.push_back(b);
    }

    // Rotate blossom b so that vertex v (inside b) becomes its base,
    // augmenting the matching along the internal cycle.
    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= n_) augment_blossom(t, v);
        int len = static_cast<int>(blossomchilds_[b].size());
        int i = 0;
        while (blossomchilds_[b][i] != t) ++i;
        int j = i;
        int jstep;
        int endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        auto child = [&](int idx) { return blossomchilds_[b][((idx % len) + len) % len]; };
        auto endp = [&](int idx) { return blossomendps_[b][((idx % len) + len) % len]; };
        while (j != 0) {
            j += jstep;
            t = child(j);
            int p = endp(j - endptrick) ^ endptrick;
            if (t >= n_) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = child(j);
            if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(blossomchilds_[b].begin(), blossomchilds_[b].begin() + i,
                    blossomchilds_[b].end());
        std::rotate(blossomendps_[b].begin(), blossomendps_[b].begin() + i,
                    blossomendps_[b].end());
        blossombase_[b] = blossombase_[blossomchilds_[b][0]];
        assert(blossombase_[b] == v);
    }

    void augment_matching(int k) {
        int v = static_cast<int>(edges_[k][0]);
        int w = static_cast<int>(edges_[k][1]);
        const std::array<std::pair<int, int>, 2> sides = {
            std::make_pair(v, 2 * k + 1), std::make_pair(w, 2 * k)};
        for (auto [s, p] : sides) {
            while (true) {
                int bs = inblossom_[s];
                assert(label_[bs] == 1);
                assert(labelend_[bs] == mate_[blossombase_[bs]]);
                if (bs >= n_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                assert(label_[bt] == 2);
                assert(labelend_[bt] >= 0);
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                assert(blossombase_[bt] == t);
                if (bt >= n_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int n_;
    std::vector<std::array<long long, 3>> edges_;
    int m_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<char> has_bestedges_;
    std::vector<int> unusedblossoms_;
    std::vector<long long> dualvar_;
    std::vector<char> allowedge_;
    std::vector<int> queue_;
};

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

} // namespace

std::vector<int> max_weight_matching_int(
    int n, const std::vector<std::array<long long, 3>>& edges) {
    if (n == 0 || edges.empty()) return std::vector<int>(n, -1);
    Blossom solver(n, edges);
    return solver.solve();
}

Matching max_weight_matching(const WeightedGraph& g) {
    long long denom = 1;
    for (const Edge& e : g.edges) denom = lcm_ll(denom, e.weight.denominator());
    std::vector<std::array<long long, 3>> scaled;
    scaled.reserve(g.edges.size());
    for (const Edge& e : g.edges)
        scaled.push_back({e.u, e.v, e.weight.numerator() * (denom / e.weight.denominator())});
    std::vector<int> mate = max_weight_matching_int(g.n, scaled);

    Matching result;
    result.mate = mate;
    for (size_t k = 0; k < g.edges.size(); ++k) {
        const Edge& e = g.edges[k];
        if (mate[e.u] == e.v) {
            result.edges.push_back(static_cast<int>(k));
            result.weight += e.weight;
        }
    }
    return result;
}

Matching brute_force_max_matching(const WeightedGraph& g) {
    if (g.edges.size() > 25) throw TooLarge("brute_force_max_matching: more than 25 edges");
    const int m = static_cast<int>(g.edges.size());
    std::vector<char> used(g.n, 0);
    std::vector<int> current;
    std::vector<int> best;
    Rational best_weight{0};
    Rational current_weight{0};
    bool have_best = false;

    std::function<void(int)> rec = [&](int k) {
        if (k == m) {
            if (!have_best || current_weight > best_weight ||
                (current_weight == best_weight && current < best)) {
                best = current;
                best_weight = current_weight;
                have_best = true;
            }
            return;
        }
        rec(k + 1);
        const Edge& e = g.edges[k];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            current.push_back(k);
            current_weight += e.weight;
            rec(k + 1);
            current_weight -= e.weight;
            current.pop_back();
            used[e.u] = used[e.v] = 0;
        }
    };
    rec(0);

    Matching result;
    result.edges = best;
    std::sort(result.edges.begin(), result.edges.end());
    result.weight = best_weight;
    result.mate.assign(g.n, -1);
    for (int k : result.edges) {
        result.mate[g.edges[k].u] = g.edges[k].v;
        result.mate[g.edges[k].v] = g.edges[k].u;
    }
    return result;
}

} // namespace pcov
