#include "sis/problem.hpp"

#include <istream>
#include <sstream>

#include "sis/fibering.hpp"
#include "sis/oracle.hpp"

namespace sis {

namespace {

const Json& require(const Json& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InputError(std::string(where) + ": missing \"" + key + "\"");
    }
    return obj.at(key);
}

Group parse_group(const Json& j) {
    const auto& moduli = require(j, "moduli", "group");
    if (!moduli.is_array() || moduli.empty()) throw InputError("group.moduli must be a non-empty array");
    std::vector<std::int64_t> out;
    for (const auto& n : moduli) {
        if (!n.is_number_integer()) throw InputError("group.moduli entries must be integers");
        out.push_back(n.get<std::int64_t>());
    }
    try {
        return Group(std::move(out));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Element parse_element(const Group& g, const Json& j) {
    if (!j.is_array()) throw InputError("element must be an integer array");
    std::vector<std::int64_t> coords;
    for (const auto& c : j) {
        if (!c.is_number_integer()) throw InputError("element coordinates must be integers");
        coords.push_back(c.get<std::int64_t>());
    }
    try {
        return g.reduce(coords);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Subgroup parse_subgroup(const Group& g, const Json& j, const char* name) {
    const auto& gens = require(j, "generators", name);
    if (!gens.is_array()) throw InputError(std::string(name) + ".generators must be an array");
    std::vector<Element> out;
    for (const auto& e : gens) out.push_back(parse_element(g, e));
    return subgroup_closure(g, out);
}

Complex parse_complex(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw InputError("complex values must be [re, im] pairs or numbers");
}

std::vector<Complex> parse_values(const Group& g, const Json& j) {
    if (!j.is_array()) throw InputError("generator values must be an array");
    if (j.size() != g.order()) {
        throw InputError("generator has " + std::to_string(j.size()) + " values, group order is " +
                         std::to_string(g.order()));
    }
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(parse_complex(v));
    return out;
}

Json group_json(const Group& g) { return Json{{"moduli", g.moduli()}}; }

Json elements_json(const Group& g, const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(to_json(g.element(i)));
    return out;
}

std::vector<Signal> signals_of(const std::vector<Spectrum>& spectra) {
    std::vector<Signal> out;
    out.reserve(spectra.size());
    for (const auto& s : spectra) out.push_back(idft(s));
    return out;
}

void require_generators(const ProblemFile& p) {
    if (p.generators.empty()) throw InputError("problem has no generators");
}

const Subgroup& require_m(const ProblemFile& p) {
    if (!p.m) throw InputError("problem has no \"M\"");
    return *p.m;
}

}  // namespace

ProblemFile parse_problem(const Json& doc) {
    if (!doc.is_object()) throw InputError("problem file must be a JSON object");
    Group g = parse_group(require(doc, "group", "problem"));
    Subgroup h = parse_subgroup(g, require(doc, "H", "problem"), "H");
    std::optional<Subgroup> m;
    if (doc.contains("M") && !doc.at("M").is_null()) {
        m = parse_subgroup(g, doc.at("M"), "M");
        if (!h.is_subset_of(*m)) throw InputError("M does not contain H");
    }
    std::vector<Spectrum> gens;
    if (doc.contains("generators")) {
        const auto& arr = doc.at("generators");
        if (!arr.is_array()) throw InputError("generators must be an array");
        for (const auto& item : arr) {
            const bool has_spec = item.is_object() && item.contains("spectrum");
            const bool has_sig = item.is_object() && item.contains("signal");
            if (has_spec == has_sig) {
                throw InputError("each generator needs exactly one of \"spectrum\" or \"signal\"");
            }
            if (has_spec) {
                gens.emplace_back(g, parse_values(g, item.at("spectrum")));
            } else {
                gens.push_back(chop(dft(Signal(g, parse_values(g, item.at("signal"))))));
            }
        }
    }
    return ProblemFile{std::move(g), std::move(h), std::move(m), std::move(gens)};
}

ProblemFile read_problem(std::istream& in) {
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_problem(doc);
}

Json to_json(const Element& e) { return Json(e.coords); }

Json to_json(const Subgroup& s) {
    Json gens = Json::array();
    for (const auto& e : s.generators()) gens.push_back(to_json(e));
    return Json{{"generators", gens}, {"elements", elements_json(s.parent(), s.elements())}, {"order", s.order()}};
}

Json to_json(const std::vector<Complex>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(Json::array({v.real(), v.imag()}));
    return out;
}

Json to_json(const InvarianceReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.per_omega) {
        Json sig = Json::array();
        std::ostringstream identity;
        identity << row.rank_total << " = ";
        for (std::size_t i = 0; i < row.sigma_ranks.size(); ++i) {
            sig.push_back({{"sigma", to_json(row.sigma_ranks[i].sigma)}, {"rank", row.sigma_ranks[i].rank}});
            identity << (i ? "+" : "") << row.sigma_ranks[i].rank;
        }
        rows.push_back({{"omega", to_json(row.omega)},
                        {"rank_total", row.rank_total},
                        {"sigma_ranks", sig},
                        {"identity", identity.str()},
                        {"holds", row.rank_total == row.rank_sum()}});
    }
    Json fails = Json::array();
    for (const auto& f : r.failures) {
        fails.push_back({{"generator", f.generator},
                         {"sigma", to_json(f.sigma)},
                         {"omega", to_json(f.omega)},
                         {"residual", f.residual}});
    }
    return Json{{"verdict", r.verdict},
                {"per_omega", rows},
                {"failures", fails},
                {"invariance_set", r.invariance_set ? to_json(*r.invariance_set) : Json(nullptr)}};
}

Json to_json(const SupportReport& r) {
    Json out{{"E_sizes", r.e_sizes},
             {"support_in_section", r.support_in_section},
             {"support_total", r.support_total},
             {"weighted_dimension", r.weighted_dimension},
             {"section_bound", r.section_bound},
             {"omega_count", r.omega_count},
             {"bound_holds", r.bound_holds},
             {"wiener_set", nullptr},
             {"full_support_bound_holds", nullptr}};
    if (r.wiener_set) out["wiener_set"] = *r.wiener_set;
    if (r.full_support_bound_holds) out["full_support_bound_holds"] = *r.full_support_bound_holds;
    return out;
}

CommandResult cmd_analyze(const ProblemFile& p, double tol_rel) {
    const Subgroup& m = require_m(p);
    require_generators(p);
    const auto ictx = refine_context(make_fiber_context(p.group, p.h), m);
    const auto by_rank = is_invariant_rank(ictx, p.generators, tol_rel);
    const auto by_subspace = is_invariant_subspace(ictx, p.generators, tol_rel);
    const auto support = support_report(ictx, p.generators, tol_rel);
    const bool agree = by_rank.verdict == by_subspace.verdict;

    Json support_json = to_json(support);
    // The bound is a theorem only for M-invariant spaces.
    support_json["theorem_applies"] = by_rank.verdict && agree;

    CommandResult out;
    out.report = Json{{"command", "analyze"},
                      {"group", group_json(p.group)},
                      {"H", to_json(p.h)},
                      {"M", to_json(m)},
                      {"tolerance", tol_rel},
                      {"verdict", by_rank.verdict && by_subspace.verdict},
                      {"criteria_agree", agree},
                      {"rank_criterion", to_json(by_rank)},
                      {"subspace_criterion", to_json(by_subspace)},
                      {"support", support_json}};
    if (!agree) {
        out.exit_code = kExitDisagreement;
    } else if (!by_rank.verdict) {
        out.exit_code = kExitNotInvariant;
    }
    return out;
}

CommandResult cmd_invariance_set(const ProblemFile& p, double tol_rel) {
    require_generators(p);
    const auto base = make_fiber_context(p.group, p.h);
    const Subgroup inv = invariance_set(base, p.generators, tol_rel);
    CommandResult out;
    out.report = Json{{"command", "invariance-set"},
                      {"group", group_json(p.group)},
                      {"H", to_json(p.h)},
                      {"tolerance", tol_rel},
                      {"invariance_set", to_json(inv)},
                      {"index", p.group.order() / inv.order()},
                      {"is_subgroup", is_subgroup(p.group, inv.elements())},
                      {"contains_H", p.h.is_subset_of(inv)}};
    return out;
}

CommandResult cmd_construct(const ProblemFile& p) {
    const Subgroup& m = require_m(p);
    const auto ictx = refine_context(make_fiber_context(p.group, p.h), m);
    const Spectrum phi = exactly_invariant_spectrum(ictx);
    Json h_gens = Json::array();
    for (const auto& e : p.h.generators()) h_gens.push_back(to_json(e));
    Json m_gens = Json::array();
    for (const auto& e : m.generators()) m_gens.push_back(to_json(e));
    CommandResult out;
    out.report = Json{{"group", group_json(p.group)},
                      {"H", {{"generators", h_gens}}},
                      {"M", {{"generators", m_gens}}},
                      {"generators", Json::array({Json{{"spectrum", to_json(phi.values)}}})}};
    return out;
}

CommandResult cmd_verify(const ProblemFile& p, double tol_rel) {
    require_generators(p);
    const auto base = make_fiber_context(p.group, p.h);
    const auto signals = signals_of(p.generators);

    const Subgroup fiber_set = invariance_set(base, p.generators, tol_rel);
    const Subgroup brute_set = oracle::brute_invariance_set(p.group, p.h, signals, tol_rel);
    bool agreement = fiber_set == brute_set;

    Json report{{"command", "verify"},
                {"group", group_json(p.group)},
                {"H", to_json(p.h)},
                {"tolerance", tol_rel},
                {"invariance_set", {{"fiber", to_json(fiber_set)}, {"oracle", to_json(brute_set)}}}};

    if (p.m) {
        const auto ictx = refine_context(base, *p.m);
        const bool by_rank = is_invariant_rank(ictx, p.generators, tol_rel).verdict;
        const bool by_subspace = is_invariant_subspace(ictx, p.generators, tol_rel).verdict;
        const auto dense = oracle::brute_decomposition_check(p.group, p.h, *p.m, signals, tol_rel);
        const bool by_translation = p.m->is_subset_of(brute_set);
        agreement = agreement && by_rank == by_subspace && by_rank == dense.holds && by_rank == by_translation;
        report["M"] = to_json(*p.m);
        report["verdicts"] = {{"rank", by_rank},
                              {"subspace", by_subspace},
                              {"oracle_decomposition", dense.holds},
                              {"oracle_translation", by_translation}};
        report["oracle_dimensions"] = {{"dim_S", dense.dim_s},
                                       {"sum_dim_U_sigma", dense.dim_sum},
                                       {"worst_residual", dense.worst_residual}};
    }
    report["agreement"] = agreement;
    return CommandResult{std::move(report), agreement ? kExitOk : kExitDisagreement};
}

}  // namespace sis
