#include "kdcc/commands.hpp"

#include <charconv>
#include <limits>
#include <sstream>

#include "kdcc/io.hpp"

namespace kdcc {

namespace {

Graph load(const Instance& in) {
    if (in.spec)
        return build(*in.spec);
    if (in.file)
        return load_graph_file(*in.file);
    throw std::invalid_argument("no input: give a family instance or --file");
}

Json spec_params(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CompleteBipartiteSpec>)
                return Json::array({s.a, s.b});
            else if constexpr (std::is_same_v<T, PerfectTreeSpec>)
                return Json::array({s.r, s.l});
            else
                return Json::array({s.n});
        },
        spec);
}

// Order and size of a family instance without building it.
std::pair<BigInt, BigInt> spec_counts(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::pair<BigInt, BigInt> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>)
                return {BigInt(s.n), BigInt(s.n) - 1};
            else if constexpr (std::is_same_v<T, CycleSpec>)
                return {BigInt(s.n), BigInt(s.n)};
            else if constexpr (std::is_same_v<T, CompleteSpec>)
                return {BigInt(s.n), BigInt(s.n) * (s.n - 1) / 2};
            else if constexpr (std::is_same_v<T, CompleteBipartiteSpec>)
                return {BigInt(s.a) + s.b, BigInt(s.a) * s.b};
            else {
                BigInt order = s.l + 1;
                if (s.r > 1)
                    order = (boost::multiprecision::pow(BigInt(s.r), static_cast<unsigned>(s.l + 1)) - 1) / (s.r - 1);
                return {order, order - 1};
            }
        },
        spec);
}

bool buildable(const FamilySpec& spec) {
    return spec_counts(spec).first <= std::numeric_limits<VertexId>::max();
}

Json spec_input_json(const FamilySpec& spec) {
    const auto [order, size] = spec_counts(spec);
    Json j;
    j["family"] = family_name(spec);
    j["params"] = spec_params(spec);
    j["instance"] = describe(spec);
    j["vertices"] = big_to_json(order);
    j["edges"] = big_to_json(size);
    return j;
}

Json header(const std::string& command, Json input, unsigned k) {
    Json j;
    j["schema"] = report_schema;
    j["command"] = command;
    j["input"] = std::move(input);
    j["k"] = k;
    return j;
}

Json header(const std::string& command, const Instance& in, const Graph& g, unsigned k) {
    if (in.spec)
        return header(command, spec_input_json(*in.spec), k);
    Json j;
    j["file"] = in.file->string();
    j["vertices"] = g.order();
    j["edges"] = g.size();
    return header(command, std::move(j), k);
}

Json oracle_json(const OracleResult& r, const std::optional<FamilySpec>& spec) {
    Json j;
    j["value"] = r.minimum;
    j["provenance"] = "oracle";
    j["witness"] = witness_to_json(r.witness, spec);
    j["explored"] = r.explored;
    return j;
}

Json packing_json(const PathPacking& packing) {
    Json j;
    j["size"] = packing.size();
    j["certified"] = packing.certified;
    j["paths"] = packing.paths;
    return j;
}

std::string provenance_of(const std::string& case_tag) {
    return case_tag == "extension: p=0" ? case_tag : std::string("closed-form");
}

template <class MakeWitness>
Json formula_json(const FormulaResult& r, const FamilySpec& spec, MakeWitness make_witness) {
    Json j;
    j["value"] = big_to_json(r.value);
    j["provenance"] = provenance_of(r.case_tag);
    j["case"] = r.case_tag;
    if (buildable(spec))
        j["witness"] = witness_to_json(make_witness(), spec);
    else
        j["witness"] = nullptr;
    return j;
}

std::vector<FamilySpec> expand_grid(const VerifyRequest& req) {
    std::vector<FamilySpec> out;
    std::vector<std::uint64_t> current(req.params.size());
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == req.params.size()) {
            out.push_back(parse_family(req.family, current));
            return;
        }
        for (std::uint64_t v = req.params[depth].lo; v <= req.params[depth].hi; ++v) {
            current[depth] = v;
            self(self, depth + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

}  // namespace

Range Range::parse(const std::string& text) {
    auto number = [&](std::string_view s) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument("bad range '" + text + "' (expected N or LO:HI)");
        return v;
    };
    const auto colon = text.find(':');
    Range r;
    if (colon == std::string::npos) {
        r.lo = r.hi = number(text);
    } else {
        r.lo = number(std::string_view(text).substr(0, colon));
        r.hi = number(std::string_view(text).substr(colon + 1));
    }
    if (r.lo > r.hi)
        throw std::invalid_argument("empty range '" + text + "'");
    return r;
}

Json big_to_json(const BigInt& value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
        return value.convert_to<std::uint64_t>();
    return value.str();
}

Json witness_to_json(const Witness& w, const std::optional<FamilySpec>& spec) {
    Json j;
    j["k"] = w.k;
    j["vertices"] = w.vertices;
    Json edges = Json::array();
    for (const Edge& e : w.edges)
        edges.push_back({e.u, e.v});
    j["edges"] = edges;
    if (spec && (std::holds_alternative<PathSpec>(*spec) || std::holds_alternative<CycleSpec>(*spec))) {
        Json labels = Json::array();
        for (VertexId v : w.vertices)
            labels.push_back(v + 1);
        j["labels"] = labels;
    }
    if (spec && std::holds_alternative<PerfectTreeSpec>(*spec)) {
        Json coords = Json::array();
        for (VertexId v : w.vertices) {
            const TreeCoordinate c = tree_coordinate(std::get<PerfectTreeSpec>(*spec), v);
            coords.push_back({c.level, c.index});
        }
        j["coordinates"] = coords;
    }
    return j;
}

Witness witness_from_json(const Json& j) {
    Witness w;
    w.k = j.at("k").get<unsigned>();
    w.vertices = j.at("vertices").get<std::vector<VertexId>>();
    for (const auto& e : j.at("edges"))
        w.edges.push_back(Edge::make(e.at(0).get<VertexId>(), e.at(1).get<VertexId>()));
    return w;
}

std::string cmd_gen(const FamilySpec& spec) {
    std::ostringstream out;
    write_edge_list(out, build(spec));
    return out.str();
}

Json cmd_cv(const Instance& in, unsigned k, const OracleLimits& limits) {
    if (in.spec) {
        Json report = header("cv", spec_input_json(*in.spec), k);
        report["result"] = formula_json(cv(*in.spec, k), *in.spec, [&] { return vertex_witness(*in.spec, k); });
        return report;
    }
    const Graph g = load(in);
    Json report = header("cv", in, g, k);
    report["result"] = oracle_json(min_vertex_disconnecting(g, k, limits), std::nullopt);
    return report;
}

Json cmd_cm(const Instance& in, unsigned k, std::uint64_t p, const OracleLimits& limits) {
    if (in.spec) {
        Json report = header("cm", spec_input_json(*in.spec), k);
        report["p"] = p;
        report["result"] = formula_json(cm(*in.spec, k, p), *in.spec, [&] { return mixed_witness(*in.spec, k, p); });
        return report;
    }
    const Graph g = load(in);
    Json report = header("cm", in, g, k);
    report["p"] = p;
    report["result"] = oracle_json(min_mixed(g, k, p, limits), std::nullopt);
    return report;
}

Json cmd_curve(const Instance& in, unsigned k, const OracleLimits& limits) {
    Json pairs = Json::array();
    if (in.spec) {
        Json report = header("curve", spec_input_json(*in.spec), k);
        for (const ConnectivityPair& pair : curve(*in.spec, k).pairs) {
            Json row;
            row["p"] = pair.p;
            row["q"] = big_to_json(pair.q);
            row["provenance"] = provenance_of(pair.case_tag);
            row["case"] = pair.case_tag;
            row["witness"] = witness_to_json(mixed_witness(*in.spec, k, pair.p), in.spec);
            pairs.push_back(row);
        }
        report["pairs"] = pairs;
        return report;
    }
    const Graph g = load(in);
    Json report = header("curve", in, g, k);
    const std::uint64_t last = min_vertex_disconnecting(g, k, limits).minimum;
    for (std::uint64_t p = 0; p <= last; ++p) {
        const OracleResult r = min_mixed(g, k, p, limits);
        Json row;
        row["p"] = p;
        row["q"] = r.minimum;
        row["provenance"] = "oracle";
        row["witness"] = witness_to_json(r.witness);
        pairs.push_back(row);
    }
    report["pairs"] = pairs;
    return report;
}

Json cmd_oracle(const Instance& in, unsigned k, std::optional<std::uint64_t> p, const OracleLimits& limits) {
    const Graph g = load(in);
    Json report = header("oracle", in, g, k);
    report["vertex"] = oracle_json(min_vertex_disconnecting(g, k, limits), in.spec);
    report["edge"] = oracle_json(min_edge_disconnecting(g, k, limits), in.spec);
    if (p) {
        report["p"] = *p;
        report["mixed"] = oracle_json(min_mixed(g, k, *p, limits), in.spec);
    }
    report["packing"] = packing_json(max_disjoint_k_paths(g, k, PackingMode::exact, limits));
    return report;
}

Json cmd_packing(const Instance& in, unsigned k, bool greedy, const OracleLimits& limits) {
    const Graph g = load(in);
    Json report = header("packing", in, g, k);
    report["packing"] = packing_json(
        max_disjoint_k_paths(g, k, greedy ? PackingMode::greedy : PackingMode::exact, limits));
    return report;
}

VerifyOutcome cmd_verify(const VerifyRequest& req, const OracleLimits& limits) {
    if (req.k.lo < 2)
        throw std::invalid_argument("verify compares closed forms, which need k >= 2");
    VerifyOutcome out;
    Json rows = Json::array();
    std::size_t matched = 0, mismatched = 0, skipped = 0;
    auto tally = [&](Json& row, bool ok) {
        row["status"] = ok ? "match" : "mismatch";
        row["match"] = ok;
        (ok ? matched : mismatched)++;
    };
    auto skip = [&](Json& row, const std::string& why) {
        row["status"] = "skipped";
        row["reason"] = why;
        ++skipped;
    };

    for (const FamilySpec& spec : expand_grid(req)) {
        const Graph g = build(spec);
        for (auto k = static_cast<unsigned>(req.k.lo); k <= req.k.hi; ++k) {
            Json row;
            row["instance"] = describe(spec);
            row["k"] = k;
            row["variant"] = "vertex";
            const FormulaResult formula = cv(spec, k);
            row["formula"] = big_to_json(formula.value);
            row["case"] = formula.case_tag;
            const Witness w = vertex_witness(spec, k);
            const bool witness_ok = verify_witness(g, w) && BigInt(w.vertices.size()) == formula.value;
            row["witness_ok"] = witness_ok;
            std::uint64_t oracle_cv = 0;
            try {
                const OracleResult r = min_vertex_disconnecting(g, k, limits);
                const PathPacking packing = max_disjoint_k_paths(g, k, PackingMode::exact, limits);
                oracle_cv = r.minimum;
                row["oracle"] = r.minimum;
                row["packing"] = packing.size();
                tally(row, witness_ok && BigInt(r.minimum) == formula.value && packing.size() <= r.minimum);
            } catch (const LimitExceeded& e) {
                skip(row, e.what());
                rows.push_back(row);
                continue;
            }
            rows.push_back(row);

            if (!req.mixed)
                continue;
            for (std::uint64_t p = 0; p <= oracle_cv; ++p) {
                Json mrow;
                mrow["instance"] = describe(spec);
                mrow["k"] = k;
                mrow["variant"] = "mixed";
                mrow["p"] = p;
                if (std::holds_alternative<PerfectTreeSpec>(spec)) {
                    skip(mrow, "no closed form for the mixed parameter of perfect trees");
                    rows.push_back(mrow);
                    continue;
                }
                try {
                    const FormulaResult q = cm(spec, k, p);
                    const Witness mw = mixed_witness(spec, k, p);
                    const OracleResult r = min_mixed(g, k, p, limits);
                    mrow["formula"] = big_to_json(q.value);
                    mrow["case"] = q.case_tag;
                    mrow["oracle"] = r.minimum;
                    const bool mw_ok = verify_witness(g, mw) && mw.vertices.size() == p &&
                                       BigInt(mw.edges.size()) == q.value;
                    mrow["witness_ok"] = mw_ok;
                    tally(mrow, mw_ok && BigInt(r.minimum) == q.value);
                } catch (const LimitExceeded& e) {
                    skip(mrow, e.what());
                }
                rows.push_back(mrow);
            }
        }
    }

    out.report["schema"] = report_schema;
    out.report["command"] = "verify";
    out.report["family"] = req.family;
    Json params = Json::array();
    for (const Range& r : req.params)
        params.push_back({r.lo, r.hi});
    out.report["params"] = params;
    out.report["k"] = {req.k.lo, req.k.hi};
    out.report["mixed"] = req.mixed;
    out.report["rows"] = rows;
    out.report["summary"] = {{"matched", matched}, {"mismatched", mismatched}, {"skipped", skipped}};
    out.mismatch = mismatched > 0;
    return out;
}

Graph random_graph(std::size_t n, double edge_probability, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

VerifyOutcome cmd_verify_random(std::uint64_t count, std::uint64_t seed, std::size_t max_n, Range k_range,
                                const OracleLimits& limits) {
    if (k_range.lo < 1)
        throw std::invalid_argument("k must be at least 1");
    if (max_n < 1)
        throw std::invalid_argument("--n-max must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
    std::uniform_int_distribution<unsigned> pick_k(static_cast<unsigned>(k_range.lo),
                                                   static_cast<unsigned>(k_range.hi));
    std::uniform_real_distribution<double> pick_density(0.1, 0.6);

    VerifyOutcome out;
    Json rows = Json::array();
    std::size_t matched = 0, mismatched = 0, skipped = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::size_t n = pick_n(rng);
        const unsigned k = pick_k(rng);
        const Graph g = random_graph(n, pick_density(rng), rng);
        Json row;
        row["graph"] = i;
        row["vertices"] = n;
        row["edges"] = g.size();
        row["k"] = k;
        const bool failure = is_failure_state(g, k);
        const bool pair = has_k_pair(g, k);
        bool ok = failure == !pair;
        row["failure_state"] = failure;
        row["has_k_pair"] = pair;
        try {
            const std::size_t packed = max_disjoint_k_paths(g, k, PackingMode::exact, limits).size();
            row["packing"] = packed;
            bool drop_ok = true;
            for (VertexId v = 0; v < n; ++v) {
                const VertexId gone[] = {v};
                if (max_disjoint_k_paths(delete_vertices(g, gone).graph, k, PackingMode::exact, limits).size() + 1 <
                    packed)
                    drop_ok = false;
            }
            for (const Edge& e : g.edges()) {
                const Edge gone[] = {e};
                if (max_disjoint_k_paths(delete_edges(g, gone), k, PackingMode::exact, limits).size() + 1 < packed)
                    drop_ok = false;
            }
            row["packing_drop_ok"] = drop_ok;
            ok = ok && drop_ok;
            if (g.size() <= limits.max_edges) {
                const std::uint64_t vertex_min = min_vertex_disconnecting(g, k, limits).minimum;
                bool bound_ok = vertex_min >= packed;
                for (std::uint64_t p = 0; p <= vertex_min; ++p)
                    bound_ok = bound_ok && p + min_mixed(g, k, p, limits).minimum >= packed;
                row["mixed_bound_ok"] = bound_ok;
                ok = ok && bound_ok;
            }
        } catch (const LimitExceeded& e) {
            row["status"] = "skipped";
            row["reason"] = e.what();
            ++skipped;
            rows.push_back(row);
            continue;
        }
        row["status"] = ok ? "match" : "mismatch";
        row["match"] = ok;
        (ok ? matched : mismatched)++;
        rows.push_back(row);
    }
    out.report["schema"] = report_schema;
    out.report["command"] = "verify";
    out.report["family"] = "random";
    out.report["seed"] = seed;
    out.report["count"] = count;
    out.report["rows"] = rows;
    out.report["summary"] = {{"matched", matched}, {"mismatched", mismatched}, {"skipped", skipped}};
    out.mismatch = mismatched > 0;
    return out;
}

}  // namespace kdcc
