#include "perfcone/classify.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "perfcone/parallel.hpp"

namespace perfcone {

namespace {

// realizability verdicts are recomputed often across the pipeline; memoize
// by canonical serialization
class RealizeCache {
public:
    bool realizable(const VectorConfig& c) {
        const std::string key = c.serialize();
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        bool r = is_perfect_cone_config(c).realizable;
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(key, r);
        return r;
    }

private:
    std::mutex mu_;
    std::map<std::string, bool> memo_;
};

RealizeCache& cache() {
    static RealizeCache c;
    return c;
}

std::string one_line(const VectorConfig& c) {
    std::string s = c.serialize();
    for (char& ch : s)
        if (ch == '\n') ch = ';';
    if (!s.empty() && s.back() == ';') s.pop_back();
    return s;
}

OrbitInfo orbit_info(const VectorConfig& rep) {
    RayCone c{rep};
    return OrbitInfo{rep, is_basic(c), is_simplicial(c), sublattice_index(c)};
}

VectorConfig saturate_if_needed(const VectorConfig& c) {
    if (span_rank(c) == c.ambient_dim()) return c;
    return saturate(c).config;
}

// deterministic greedy dedup over precomputed saturations
std::vector<VectorConfig> dedup_sorted(std::vector<VectorConfig> sats) {
    std::sort(sats.begin(), sats.end());
    sats.erase(std::unique(sats.begin(), sats.end()), sats.end());
    std::vector<VectorConfig> reps;
    std::map<Fingerprint, std::vector<std::size_t>> buckets;
    for (const auto& s : sats) {
        auto& bucket = buckets[fingerprint(s)];
        bool matched = false;
        for (std::size_t idx : bucket)
            if (are_equivalent(reps[idx], s)) {
                matched = true;
                break;
            }
        if (!matched) {
            reps.push_back(s);
            bucket.push_back(reps.size() - 1);
        }
    }
    return reps;
}

}  // namespace

BaseSystem make_base(std::vector<IntVec> vectors) {
    if (vectors.empty()) throw std::invalid_argument("make_base: no vectors");
    const std::size_t g = vectors[0].size();
    if (vectors.size() != g) throw std::invalid_argument("make_base: need g vectors in Z^g");
    IntMatrix m(g, g);
    for (std::size_t i = 0; i < g; ++i) {
        if (vectors[i].size() != g) throw std::invalid_argument("make_base: ragged vectors");
        if (!is_primitive(vectors[i])) throw std::invalid_argument("make_base: vector not primitive");
        for (std::size_t j = 0; j < g; ++j) m(i, j) = vectors[i][j];
    }
    Int det = determinant(m);
    if (det == 0) throw std::invalid_argument("make_base: vectors are dependent");
    return BaseSystem{std::move(vectors), int_abs(det)};
}

std::vector<IntVec> extension_candidates(const BaseSystem& base) {
    const std::size_t g = base.vectors.size();
    IntMatrix b(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) b(i, j) = base.vectors[i][j];
    const Int det = determinant(b);
    if (det == 0) throw std::invalid_argument("extension_candidates: degenerate base");
    const Int idx = int_abs(det);
    const IntMatrix bt = b.transposed();

    std::set<IntVec> base_pairs;
    for (const auto& v : base.vectors) base_pairs.insert(sign_canonical(v));

    // x = B^t y / det over the box y in [-idx, idx]^g covers exactly the
    // vectors with all adjugate inner products bounded by the index
    std::set<IntVec> found;
    IntVec y(g, Int(-idx));
    while (true) {
        if (!is_zero(y)) {
            IntVec x = mat_vec(bt, y);
            bool integral = true;
            for (std::size_t i = 0; i < g && integral; ++i) {
                Int q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x[i].get_mpz_t(), det.get_mpz_t());
                if (r != 0)
                    integral = false;
                else
                    x[i] = q;
            }
            if (integral && is_primitive(x)) {
                IntVec c = sign_canonical(x);
                if (!base_pairs.count(c)) found.insert(std::move(c));
            }
        }
        std::size_t k = 0;
        while (k < g && y[k] == idx) {
            y[k] = -idx;
            ++k;
        }
        if (k == g) break;
        y[k] += 1;
    }
    return std::vector<IntVec>(found.begin(), found.end());
}

OrbitReport extend_and_classify(const std::vector<BaseSystem>& bases, std::size_t target_dim,
                                unsigned threads) {
    OrbitReport report;
    if (bases.empty()) return report;
    const std::size_t g = bases[0].vectors.size();
    if (target_dim != g + 1)
        throw std::invalid_argument("extend_and_classify: only one extension step is supported");
    report.g = g;

    std::vector<VectorConfig> survivors;
    for (const auto& base : bases) {
        if (base.vectors.size() != g)
            throw std::invalid_argument("extend_and_classify: mixed base dimensions");
        VectorConfig base_config(g, base.vectors);
        report.domains.push_back(one_line(base_config));
        if (!cache().realizable(base_config)) continue;

        std::vector<IntVec> cands = extension_candidates(base);
        AutGroup aut = automorphism_group(base_config);
        std::vector<IntMatrix> elems = group_elements(aut);

        // one candidate per orbit of the base's automorphism group
        std::set<IntVec> remaining(cands.begin(), cands.end());
        std::vector<IntVec> orbit_reps;
        while (!remaining.empty()) {
            IntVec v = *remaining.begin();
            orbit_reps.push_back(v);
            for (const auto& u : elems) {
                IntVec img = sign_canonical(mat_vec(u, v));
                remaining.erase(img);
            }
        }

        std::vector<std::optional<VectorConfig>> accepted(orbit_reps.size());
        parallel_for(orbit_reps.size(), threads, [&](std::size_t i) {
            const IntVec& v = orbit_reps[i];
            std::vector<IntVec> vecs = base.vectors;
            vecs.push_back(v);
            VectorConfig extended(g, vecs);

            // every g-subset must be a realizable base of index at most the
            // base's (maximal-index convention)
            for (std::size_t skip = 0; skip <= g; ++skip) {
                std::vector<IntVec> sub;
                for (std::size_t t = 0; t <= g; ++t)
                    if (t != skip) sub.push_back(vecs[t]);
                IntMatrix m(g, g);
                for (std::size_t r = 0; r < g; ++r)
                    for (std::size_t c2 = 0; c2 < g; ++c2) m(r, c2) = sub[r][c2];
                Int det = int_abs(determinant(m));
                if (det == 0 || det > base.index) return;
                if (!cache().realizable(VectorConfig(g, sub))) return;
            }
            if (!cache().realizable(extended)) return;
            if (rank_rational(stacked_sym2(extended)) != g + 1) return;
            accepted[i] = std::move(extended);
        });
        for (auto& a : accepted)
            if (a) survivors.push_back(std::move(*a));
    }

    std::vector<VectorConfig> reps = dedup_sorted(std::move(survivors));
    for (const auto& rep : reps) report.dims[g + 1].push_back(orbit_info(rep));
    return report;
}

OrbitReport classify_faces(const std::vector<RayCone>& domains,
                           const std::vector<std::string>& labels, std::size_t dim_lo,
                           std::size_t dim_hi, unsigned threads) {
    if (domains.empty()) throw std::invalid_argument("classify_faces: no domains");
    if (labels.size() != domains.size())
        throw std::invalid_argument("classify_faces: label/domain mismatch");
    const std::size_t g = domains[0].g();
    for (const auto& d : domains)
        if (d.g() != g) throw std::invalid_argument("classify_faces: mixed ambient dimensions");
    for (std::size_t i = 0; i < domains.size(); ++i)
        if (!cache().realizable(domains[i].generators))
            throw std::invalid_argument("classify_faces: domain '" + labels[i] +
                                        "' is not a perfect domain");

    OrbitReport report;
    report.g = g;
    report.domains = labels;

    std::vector<std::pair<std::size_t, VectorConfig>> faces;  // (dim, face config)
    for (const auto& domain : domains) {
        auto infos = enumerate_faces(domain, dim_lo, dim_hi);
        for (const auto& info : infos)
            faces.emplace_back(info.dim, subcone(domain, info.generators).generators);
    }

    std::vector<VectorConfig> sats(faces.size(), VectorConfig(1, {{Int(1)}}));
    parallel_for(faces.size(), threads,
                 [&](std::size_t i) { sats[i] = saturate_if_needed(faces[i].second); });

    std::map<std::size_t, std::vector<VectorConfig>> by_dim;
    for (std::size_t i = 0; i < faces.size(); ++i) by_dim[faces[i].first].push_back(sats[i]);

    for (auto& [dim, list] : by_dim) {
        std::vector<VectorConfig> reps = dedup_sorted(std::move(list));
        std::vector<OrbitInfo> infos(reps.size(), OrbitInfo{VectorConfig(1, {{Int(1)}}), false,
                                                            false, Int(0)});
        parallel_for(reps.size(), threads, [&](std::size_t i) { infos[i] = orbit_info(reps[i]); });
        report.dims[dim] = std::move(infos);
    }
    return report;
}

TheoremReport verify_theorems(int g, unsigned threads) {
    std::vector<RayCone> domains;
    std::vector<std::string> labels;
    switch (g) {
        case 2:
            domains = {domain_a2()};
            labels = {"A2"};
            break;
        case 3:
            domains = {domain_a3()};
            labels = {"A3"};
            break;
        case 4:
            domains = {domain_a4(), domain_d4()};
            labels = {"A4", "D4"};
            break;
        default:
            throw std::invalid_argument("verify_theorems: g must be 2, 3 or 4");
    }
    const std::size_t top = static_cast<std::size_t>(g) * (g + 1) / 2;

    TheoremReport rep;
    rep.g = g;
    rep.orbits = classify_faces(domains, labels, 1, top, threads);

    {
        TheoremCheck chk{"faces of dimension <= 9 are basic", true, ""};
        for (const auto& [dim, orbits] : rep.orbits.dims) {
            if (dim > 9) continue;
            for (const auto& o : orbits)
                if (!o.basic) {
                    chk.pass = false;
                    chk.detail = "dimension " + std::to_string(dim) + " orbit not basic: " +
                                 one_line(o.config);
                    break;
                }
            if (!chk.pass) break;
        }
        if (chk.pass) chk.detail = "exhaustive over enumerated faces";
        rep.checks.push_back(std::move(chk));
    }
    {
        TheoremCheck chk{"dimension-10 faces are simplicial except the D4 cone", true, ""};
        auto it = rep.orbits.dims.find(10);
        if (it == rep.orbits.dims.end()) {
            chk.detail = "no dimension-10 faces at g = " + std::to_string(g);
        } else {
            std::vector<const OrbitInfo*> nonsimp;
            for (const auto& o : it->second)
                if (!o.simplicial) nonsimp.push_back(&o);
            if (g == 4) {
                VectorConfig d4 = domain_d4().generators;
                if (nonsimp.size() != 1) {
                    chk.pass = false;
                    chk.detail =
                        "expected exactly 1 non-simplicial orbit, found " +
                        std::to_string(nonsimp.size());
                } else if (!are_equivalent(nonsimp[0]->config, d4)) {
                    chk.pass = false;
                    chk.detail = "non-simplicial orbit differs from the D4 cone: " +
                                 one_line(nonsimp[0]->config);
                } else {
                    chk.detail = std::to_string(it->second.size()) +
                                 " orbits in dimension 10, exactly one non-simplicial (D4)";
                }
            } else if (!nonsimp.empty()) {
                chk.pass = false;
                chk.detail = "unexpected non-simplicial orbit: " + one_line(nonsimp[0]->config);
            }
        }
        rep.checks.push_back(std::move(chk));
    }
    {
        TheoremCheck chk{"spanning faces of dimension g, g+1, g+2 are simplicial", true, ""};
        std::size_t checked = 0;
        for (const auto& [dim, orbits] : rep.orbits.dims) {
            if (dim < static_cast<std::size_t>(g) || dim > static_cast<std::size_t>(g) + 2)
                continue;
            for (const auto& o : orbits) {
                if (o.config.ambient_dim() != static_cast<std::size_t>(g)) continue;
                ++checked;
                if (!o.simplicial) {
                    chk.pass = false;
                    chk.detail = "dimension " + std::to_string(dim) + " orbit not simplicial: " +
                                 one_line(o.config);
                }
            }
        }
        if (chk.pass) chk.detail = std::to_string(checked) + " spanning orbits checked";
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

std::string report_to_json(const OrbitReport& report) {
    nlohmann::json j;
    j["g"] = std::to_string(report.g);
    j["domains"] = report.domains;
    nlohmann::json dims = nlohmann::json::object();
    for (const auto& [dim, orbits] : report.dims) {
        nlohmann::json d;
        d["count"] = std::to_string(orbits.size());
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& o : orbits) {
            nlohmann::json e;
            nlohmann::json vecs = nlohmann::json::array();
            for (const auto& v : o.config.reps()) {
                nlohmann::json row = nlohmann::json::array();
                for (const auto& x : v) row.push_back(x.get_str());
                vecs.push_back(std::move(row));
            }
            e["vectors"] = std::move(vecs);
            e["basic"] = o.basic;
            e["simplicial"] = o.simplicial;
            e["index"] = o.index.get_str();
            arr.push_back(std::move(e));
        }
        d["orbits"] = std::move(arr);
        dims[std::to_string(dim)] = std::move(d);
    }
    j["dims"] = std::move(dims);
    return j.dump(2) + "\n";
}

}  // namespace perfcone
