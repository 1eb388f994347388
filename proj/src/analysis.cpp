#include "ddg/analysis.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ddg {

namespace {

long long isqrt_floor(long long d) {
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(d)));
    while (s > 0 && s * s > d) --s;
    while ((s + 1) * (s + 1) <= d) ++s;
    return s;
}

}  // namespace

std::vector<int> Partition::class_of(int v) const {
    std::vector<int> owner(static_cast<size_t>(v), -1);
    const int n = class_size();
    for (int i = 0; i < class_count(); ++i) {
        const auto& cls = classes[static_cast<size_t>(i)];
        if (static_cast<int>(cls.size()) != n)
            throw PartitionMismatch("class " + std::to_string(i) + " has size " +
                                    std::to_string(cls.size()) + ", expected " + std::to_string(n));
        try {
            validate_vertex_set(cls, v);
        } catch (const InvalidVertexSet& e) {
            throw PartitionMismatch("class " + std::to_string(i) + ": " + e.what());
        }
        for (int u : cls) {
            if (owner[static_cast<size_t>(u)] >= 0)
                throw PartitionMismatch("vertex " + std::to_string(u) + " in two classes");
            owner[static_cast<size_t>(u)] = i;
        }
    }
    for (int u = 0; u < v; ++u)
        if (owner[static_cast<size_t>(u)] < 0)
            throw PartitionMismatch("vertex " + std::to_string(u) + " not covered");
    return owner;
}

VerifyReport verify_ddg(const Graph& g, const DdgParams& p, const Partition& part) {
    if (p.v != g.size() || p.m != part.class_count() || p.n != part.class_size() ||
        p.m * p.n != p.v)
        throw PartitionMismatch("parameters (v=" + std::to_string(p.v) + ",m=" +
                                std::to_string(p.m) + ",n=" + std::to_string(p.n) +
                                ") do not match the graph/partition shape");
    const std::vector<int> owner = part.class_of(p.v);
    VerifyReport r;
    for (int u = 0; u < p.v; ++u) {
        const int deg = g.degree(u);
        if (deg != p.k) {
            r.ok = false;
            r.u = r.v = u;
            r.observed = deg;
            r.required = p.k;
            r.message = "vertex " + std::to_string(u) + " has degree " + std::to_string(deg) +
                        ", expected " + std::to_string(p.k);
            return r;
        }
    }
    for (int u = 0; u < p.v; ++u) {
        for (int w = u + 1; w < p.v; ++w) {
            const int want = owner[static_cast<size_t>(u)] == owner[static_cast<size_t>(w)]
                                 ? p.lambda1
                                 : p.lambda2;
            const int got = g.common_neighbours(u, w);
            if (got != want) {
                r.ok = false;
                r.u = u;
                r.v = w;
                r.observed = got;
                r.required = want;
                r.message = "pair (" + std::to_string(u) + "," + std::to_string(w) + ") has " +
                            std::to_string(got) + " common neighbours, expected " +
                            std::to_string(want);
                return r;
            }
        }
    }
    r.ok = true;
    return r;
}

Recognition recognize_ddg(const Graph& g) {
    const int v = g.size();
    Recognition rec;
    const auto k = is_k_regular(g);
    if (!k) throw NotRegular("graph is not regular");

    std::map<int, long long> values;  // distinct common-neighbour counts
    for (int u = 0; u < v; ++u)
        for (int w = u + 1; w < v; ++w) ++values[g.common_neighbours(u, w)];
    for (const auto& [val, cnt] : values) rec.common_values.push_back(val);

    if (values.size() > 2)
        throw MoreThanTwoValues("common-neighbour counts take " +
                                std::to_string(values.size()) + " distinct values");
    if (values.size() <= 1) {
        // every pair alike: a (v,k,lambda)-graph, i.e. an improper DDG
        rec.kind = Recognition::Kind::Improper;
        rec.v = v;
        rec.k = *k;
        rec.lambda = values.empty() ? 0 : values.begin()->first;
        return rec;
    }

    for (int lambda1 : rec.common_values) {
        const int lambda2 = lambda1 == rec.common_values[0] ? rec.common_values[1]
                                                            : rec.common_values[0];
        // same-class relation: u ~ w iff common(u,w) = lambda1
        std::vector<int> owner(static_cast<size_t>(v), -1);
        Partition part;
        bool valid = true;
        for (int u = 0; u < v && valid; ++u) {
            if (owner[static_cast<size_t>(u)] >= 0) continue;
            VertexSet cls{u};
            for (int w = 0; w < v; ++w)
                if (w != u && g.common_neighbours(u, w) == lambda1) cls.push_back(w);
            std::sort(cls.begin(), cls.end());
            for (int w : cls) {
                if (owner[static_cast<size_t>(w)] >= 0) { valid = false; break; }
                owner[static_cast<size_t>(w)] = part.class_count();
            }
            if (valid) part.classes.push_back(std::move(cls));
        }
        if (!valid || part.classes.empty()) continue;
        const int n = part.class_size();
        if (n < 2 || v % n != 0 || part.class_count() != v / n) continue;
        bool uniform = true;
        for (const auto& cls : part.classes)
            if (static_cast<int>(cls.size()) != n) { uniform = false; break; }
        if (!uniform) continue;
        DdgParams p{v, *k, lambda1, lambda2, v / n, n};
        if (verify_ddg(g, p, part).ok) rec.readings.push_back({p, std::move(part)});
    }
    rec.kind = rec.readings.empty() ? Recognition::Kind::NotDdg : Recognition::Kind::Proper;
    return rec;
}

IntMatrix canonical_quotient(const Graph& g, const Partition& part) {
    const std::vector<int> owner = part.class_of(g.size());
    const int m = part.class_count();
    IntMatrix q(m, m);
    for (int i = 0; i < m; ++i) {
        const auto& cls = part.classes[static_cast<size_t>(i)];
        std::vector<int> ref(static_cast<size_t>(m), 0);
        for (int w : g.neighbours(cls[0])) ++ref[static_cast<size_t>(owner[static_cast<size_t>(w)])];
        for (size_t idx = 1; idx < cls.size(); ++idx) {
            std::vector<int> cnt(static_cast<size_t>(m), 0);
            for (int w : g.neighbours(cls[idx]))
                ++cnt[static_cast<size_t>(owner[static_cast<size_t>(w)])];
            if (cnt != ref) {
                int j = 0;
                while (cnt[static_cast<size_t>(j)] == ref[static_cast<size_t>(j)]) ++j;
                throw NotEquitable("class " + std::to_string(i) + ": vertices " +
                                   std::to_string(cls[0]) + " and " + std::to_string(cls[idx]) +
                                   " have " + std::to_string(ref[static_cast<size_t>(j)]) +
                                   " vs " + std::to_string(cnt[static_cast<size_t>(j)]) +
                                   " neighbours in class " + std::to_string(j));
            }
        }
        for (int j = 0; j < m; ++j) q.at(i, j) = ref[static_cast<size_t>(j)];
    }
    return q;
}

namespace {

// Splits one +/-sqrt(d) pair into signed multiplicities. `a` is the
// adjacency matrix, available for exact rank queries.
SpectrumPair resolve_pair(const IntMatrix& a, int k, long long d, int total) {
    SpectrumPair p;
    p.d = d;
    p.total = total;
    if (d < 0)
        throw InconsistentMultiplicities("negative radicand " + std::to_string(d) +
                                         ": not a real spectrum");
    const long long r = isqrt_floor(d);
    p.square = (r * r == d);
    p.root = p.square ? r : 0;
    if (d == 0) {
        // the pair collapses onto the eigenvalue 0
        p.mult_plus = total;
        p.mult_minus = 0;
        return p;
    }
    if (!p.square) {
        // +sqrt(d) and -sqrt(d) are algebraic conjugates: equal multiplicity
        if (total % 2 != 0)
            throw InconsistentMultiplicities("odd total " + std::to_string(total) +
                                             " for irrational pair");
        p.mult_plus = p.mult_minus = total / 2;
        return p;
    }
    int plus = eigen_multiplicity(a, r);
    int minus = eigen_multiplicity(a, -r);
    if (r == k) --plus;  // one copy of +sqrt(d) is the valency eigenvalue
    if (plus < 0 || plus + minus != total)
        throw InconsistentMultiplicities("eigenvalue pair +-" + std::to_string(r) + " has " +
                                         std::to_string(plus) + "+" + std::to_string(minus) +
                                         " copies, expected " + std::to_string(total));
    p.mult_plus = plus;
    p.mult_minus = minus;
    return p;
}

}  // namespace

DdgSpectrum ddg_spectrum(const DdgParams& p, const Graph& g) {
    if (!p.proper())
        throw ImproperInput("spectrum decomposition requires a proper DDG parameter tuple");
    if (p.v != g.size() || is_k_regular(g) != p.k || p.m * p.n != p.v)
        throw ParameterMismatch("parameters do not match the graph");
    DdgSpectrum s;
    s.v = p.v;
    s.k = p.k;
    const long long d1 = p.k - p.lambda1;
    const long long d2 = static_cast<long long>(p.k) * p.k -
                         static_cast<long long>(p.lambda2) * p.v;
    const int f_total = p.m * (p.n - 1);
    const int g_total = p.m - 1;

    // integer identity trace(A^2) = v*k, independent of the signed split
    if (static_cast<long long>(p.k) * p.k + f_total * d1 + g_total * d2 !=
        static_cast<long long>(p.v) * p.k)
        throw InconsistentMultiplicities("trace(A^2) identity fails for these parameters");

    const IntMatrix a = adjacency_matrix(g);
    if (d1 == d2 && d1 > 0) {
        // both pairs share one radicand; split the combined multiplicities
        SpectrumPair both = resolve_pair(a, p.k, d1, f_total + g_total);
        s.f.d = s.g.d = d1;
        s.f.square = s.g.square = both.square;
        s.f.root = s.g.root = both.root;
        s.f.total = f_total;
        s.g.total = g_total;
        if (both.square) {
            s.g.mult_plus = std::max(0, both.mult_plus - f_total);
            s.f.mult_plus = both.mult_plus - s.g.mult_plus;
            s.f.mult_minus = f_total - s.f.mult_plus;
            s.g.mult_minus = g_total - s.g.mult_plus;
            if (s.f.mult_minus < 0 || s.g.mult_minus < 0)
                throw InconsistentMultiplicities("cannot split coincident eigenvalue pairs");
        } else {
            if (f_total % 2 || g_total % 2)
                throw InconsistentMultiplicities("odd totals for coincident irrational pairs");
            s.f.mult_plus = s.f.mult_minus = f_total / 2;
            s.g.mult_plus = s.g.mult_minus = g_total / 2;
        }
    } else {
        s.f = resolve_pair(a, p.k, d1, f_total);
        s.g = resolve_pair(a, p.k, d2, g_total);
    }

    // degenerate pairs: the multiplicity of 0 must absorb them exactly
    const int zero_expected = (d1 == 0 ? f_total : 0) + (d2 == 0 ? g_total : 0);
    if (zero_expected > 0 && eigen_multiplicity(a, 0) != zero_expected)
        throw InconsistentMultiplicities("eigenvalue 0 multiplicity mismatch");

    // trace(A) = 0: valency plus the signed square-root contributions
    long long tr = p.k;
    for (const SpectrumPair* q : {&s.f, &s.g})
        if (q->square && q->d > 0)
            tr += static_cast<long long>(q->mult_plus - q->mult_minus) * q->root;
    if (tr != 0) throw InconsistentMultiplicities("trace(A) decomposition fails");

    if (1 + s.f.total + s.g.total != p.v)
        throw InconsistentMultiplicities("multiplicity totals do not sum to v");
    return s;
}

std::optional<long long> DdgSpectrum::second_largest_squared() const {
    std::optional<long long> best;
    for (const SpectrumPair* q : {&f, &g}) {
        if (q->total <= 0) continue;
        std::optional<long long> cand;
        if (q->d == 0)
            cand = 0;
        else if (q->mult_plus > 0)
            cand = q->d;
        if (cand && (!best || *cand > *best)) best = cand;
    }
    return best;
}

bool is_walk_regular_ddg(const Graph& g, const DdgParams& p, const Partition& part) {
    if (!p.proper()) throw ImproperInput("walk-regularity test is for proper DDGs");
    const IntMatrix q = canonical_quotient(g, part);
    for (int i = 1; i < q.rows(); ++i)
        if (q.at(i, i) != q.at(0, 0)) return false;
    return true;
}

std::string analysis_report_json(const Graph& g) {
    using nlohmann::json;
    json out;
    Recognition rec;
    try {
        rec = recognize_ddg(g);
    } catch (const NotRegular&) {
        out["ddg"] = false;
        out["reason"] = "not regular";
        return out.dump();
    } catch (const MoreThanTwoValues& e) {
        out["ddg"] = false;
        out["reason"] = e.what();
        return out.dump();
    }
    out["common_values"] = rec.common_values;
    if (rec.kind == Recognition::Kind::NotDdg) {
        out["ddg"] = false;
        out["reason"] = "no divisible structure fits the two common-neighbour values";
        return out.dump();
    }
    out["ddg"] = true;
    if (rec.kind == Recognition::Kind::Improper) {
        out["proper"] = false;
        out["improper"] = {{"v", rec.v}, {"k", rec.k}, {"lambda", rec.lambda}};
        return out.dump();
    }
    out["proper"] = true;
    const auto& [p, part] = rec.readings.front();
    out["params"] = {{"v", p.v},           {"k", p.k}, {"lambda1", p.lambda1},
                     {"lambda2", p.lambda2}, {"m", p.m}, {"n", p.n}};
    out["partition"] = part.classes;
    const IntMatrix q = canonical_quotient(g, part);
    json qrows = json::array();
    for (int i = 0; i < q.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < q.cols(); ++j) row.push_back(static_cast<long long>(q.at(i, j)));
        qrows.push_back(std::move(row));
    }
    out["quotient"] = std::move(qrows);
    const DdgSpectrum s = ddg_spectrum(p, g);
    const auto pair_json = [](const SpectrumPair& sp) {
        json j{{"d", sp.d},       {"square", sp.square},       {"total", sp.total},
               {"mult_plus", sp.mult_plus}, {"mult_minus", sp.mult_minus}};
        if (sp.square) j["root"] = sp.root;
        return j;
    };
    out["spectrum"] = {{"k", s.k}, {"pairs", json::array({pair_json(s.f), pair_json(s.g)})}};
    out["walk_regular"] = is_walk_regular_ddg(g, p, part);
    return out.dump();
}

}  // namespace ddg
