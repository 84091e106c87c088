#include "toral/report.hpp"

#include <sstream>

namespace toral {

namespace {

Rational parse_rational(const Json& j, const char* what) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string())
        throw parse_error(std::string(what) + ": expected a rational string");
    try {
        Rational r(j.get<std::string>());
        return r;
    } catch (const std::exception&) {
        throw parse_error(std::string(what) + ": malformed rational '" +
                          j.get<std::string>() + "'");
    }
}

std::string rat_str(const Rational& r) { return r.str(); }

Json json_int_vector(const IntVector& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

Json json_group(const FgAbelianGroup& g) {
    Json j;
    j["free_rank"] = g.free_rank;
    Json tors = Json::array();
    for (const Int& d : g.torsion) tors.push_back(d.str());
    j["torsion"] = tors;
    j["display"] = g.str();
    return j;
}

Json json_marked(const MarkedGroup& m) {
    Json j;
    j["group"] = json_group(m.group);
    j["free_coords"] = json_int_vector(m.free_coords);
    j["torsion_coords"] = json_int_vector(m.torsion_coords);
    j["display"] = m.str();
    return j;
}

Json json_symbolic(const SymbolicReal& s) {
    Json j;
    j["rational"] = rat_str(s.rational);
    Json terms = Json::object();
    for (const auto& [sym, coeff] : s.terms) terms[sym] = rat_str(coeff);
    j["terms"] = terms;
    j["display"] = s.str();
    return j;
}

const Json& require(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw parse_error(std::string("missing field '") + key + "'");
    return *it;
}

}  // namespace

std::vector<double> InputSpec::numeric_translation() const {
    if (translation_float) {
        if (translation_float->size() != static_cast<std::size_t>(n))
            throw parse_error("translation_float has wrong dimension");
        return *translation_float;
    }
    if (!translation.is_rational())
        throw parse_error(
            "simulation needs a numeric translation: irrational symbols carry "
            "no value; supply translation_float");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (const Rational& q : translation.rational_part)
        out.push_back(static_cast<double>(q));
    return out;
}

InputSpec parse_input_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("input document must be an object");

    const Json& sv = require(j, "schema_version");
    if (!sv.is_number_integer() || sv.get<int>() != kSchemaVersion)
        throw parse_error("unsupported schema_version");

    const Json& jn = require(j, "n");
    if (!jn.is_number_integer() || jn.get<long>() < 1)
        throw parse_error("n must be a positive integer");

    InputSpec spec;
    spec.n = jn.get<long>();

    const Json& jm = require(j, "matrix");
    if (!jm.is_array() || jm.size() != static_cast<std::size_t>(spec.n))
        throw parse_error("matrix must be an n x n integer array");
    spec.matrix = IntMatrix(spec.n, spec.n);
    for (long i = 0; i < spec.n; ++i) {
        const Json& row = jm[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(spec.n))
            throw parse_error("matrix must be an n x n integer array");
        for (long k = 0; k < spec.n; ++k) {
            const Json& e = row[static_cast<std::size_t>(k)];
            if (e.is_number_integer())
                spec.matrix(i, k) = Int(e.get<long long>());
            else if (e.is_string())
                try {
                    spec.matrix(i, k) = Int(e.get<std::string>());
                } catch (const std::exception&) {
                    throw parse_error("malformed matrix entry");
                }
            else
                throw parse_error("matrix entries must be integers");
        }
    }

    spec.translation = TranslationVector::zero(spec.n);
    if (auto it = j.find("translation"); it != j.end()) {
        const Json& jt = *it;
        if (!jt.is_object()) throw parse_error("translation must be an object");
        if (auto rit = jt.find("rational"); rit != jt.end()) {
            if (!rit->is_array() || rit->size() != static_cast<std::size_t>(spec.n))
                throw parse_error("translation.rational must have n entries");
            for (long i = 0; i < spec.n; ++i)
                spec.translation.rational_part[static_cast<std::size_t>(i)] =
                    parse_rational((*rit)[static_cast<std::size_t>(i)],
                                   "translation.rational");
        }
        if (auto iit = jt.find("irrational"); iit != jt.end()) {
            if (!iit->is_array())
                throw parse_error("translation.irrational must be an array");
            for (const Json& term : *iit) {
                if (!term.is_object())
                    throw parse_error("irrational term must be an object");
                TranslationVector::IrrationalTerm t;
                const Json& sym = require(term, "symbol");
                if (!sym.is_string() || sym.get<std::string>().empty())
                    throw parse_error("irrational symbol must be a nonempty string");
                t.symbol = sym.get<std::string>();
                const Json& coeffs = require(term, "coefficients");
                if (!coeffs.is_array() ||
                    coeffs.size() != static_cast<std::size_t>(spec.n))
                    throw parse_error("irrational coefficients must have n entries");
                for (const Json& c : coeffs)
                    t.coefficients.push_back(parse_rational(c, "coefficient"));
                spec.translation.irrational_terms.push_back(std::move(t));
            }
        }
    }
    spec.translation.validate();

    if (auto fit = j.find("translation_float"); fit != j.end()) {
        if (!fit->is_array() || fit->size() != static_cast<std::size_t>(spec.n))
            throw parse_error("translation_float must have n entries");
        std::vector<double> f;
        for (const Json& x : *fit) {
            if (!x.is_number()) throw parse_error("translation_float entries must be numbers");
            f.push_back(x.get<double>());
        }
        spec.translation_float = std::move(f);
    }
    return spec;
}

Json json_input(const InputSpec& spec) {
    Json j;
    j["n"] = spec.n;
    Json m = Json::array();
    for (long i = 0; i < spec.n; ++i) {
        Json row = Json::array();
        for (long k = 0; k < spec.n; ++k) row.push_back(spec.matrix(i, k).str());
        m.push_back(row);
    }
    j["matrix"] = m;
    Json t;
    Json rat = Json::array();
    for (const Rational& q : spec.translation.rational_part)
        rat.push_back(rat_str(q));
    t["rational"] = rat;
    Json irr = Json::array();
    for (const auto& term : spec.translation.irrational_terms) {
        Json jt;
        jt["symbol"] = term.symbol;
        Json coeffs = Json::array();
        for (const Rational& c : term.coefficients) coeffs.push_back(rat_str(c));
        jt["coefficients"] = coeffs;
        irr.push_back(jt);
    }
    t["irrational"] = irr;
    j["translation"] = t;
    if (spec.translation_float) j["translation_float"] = *spec.translation_float;
    return j;
}

Json json_verdict(const TransitivityVerdict& v) {
    Json j;
    j["local_homeomorphism"] = v.local_homeo;
    j["homeomorphism"] = v.homeomorphism;
    j["case"] = case_tag_str(v.case_tag);
    j["strongly_transitive"] = v.strongly_transitive;
    j["exact"] = v.exact;
    j["multiplicity_of_eigenvalue_one"] = v.multiplicity_k;
    if (v.witness.present())
        j["unimodular_divisor"] = v.witness.divisor->str();
    if (v.dual_obstruction)
        j["dual_obstruction"] = json_int_vector(*v.dual_obstruction);
    return j;
}

Json json_ktheory(const KTheoryReport& r) {
    Json j;
    j["n"] = r.n;
    j["det"] = r.det.str();
    j["case_label"] = r.case_label;
    j["simple"] = r.simple;
    j["purely_infinite"] = r.purely_infinite;
    j["k_data_valid"] = r.k_data_valid;
    if (!r.regime_note.empty()) j["regime_note"] = r.regime_note;
    if (r.k_data_valid) {
        j["K0"] = json_group(r.K0);
        j["K1"] = json_group(r.K1);
        j["K0_marked"] = json_marked(r.k0_marked);
        j["K0_presentation"] = r.k0_presentation;
        j["unit_class"] = r.unit_description;
    }
    if (r.trace_order) {
        const OrderedK0Report& t = *r.trace_order;
        Json jt;
        jt["K0"] = json_group(t.K0);
        jt["K1"] = json_group(t.K1);
        Json basis = Json::array();
        for (const IntVector& b : t.kernel_basis) basis.push_back(json_int_vector(b));
        jt["kernel_basis"] = basis;
        Json etas = Json::array();
        for (const SymbolicReal& e : t.eta_values) etas.push_back(json_symbolic(e));
        jt["eta_values"] = etas;
        jt["trace_range_rank"] = t.trace_range_rank;
        jt["positive_cone"] = t.positive_cone_description;
        j["ordered_k0"] = jt;
    }
    return j;
}

Json json_presentation(const AlgebraPresentation& p) {
    Json j;
    j["n"] = p.n;
    j["det"] = p.det.str();
    Json act = Json::array();
    for (long i = 0; i < p.n; ++i) {
        Json row = Json::array();
        for (long k = 0; k < p.n; ++k) row.push_back(p.dual_action(i, k).str());
        act.push_back(row);
    }
    j["dual_action"] = act;
    Json reps = Json::array();
    for (const IntVector& r : p.coset_reps) reps.push_back(json_int_vector(r));
    j["coset_representatives"] = reps;
    Json chars = Json::array();
    for (const SymbolicReal& c : p.characters) chars.push_back(json_symbolic(c));
    j["characters"] = chars;
    j["relations"] = p.relations;
    return j;
}

Json json_comparison(const ComparisonReport& r) {
    Json j;
    j["verdict"] = iso_verdict_str(r.verdict);
    j["reasons"] = r.reasons;
    return j;
}

Json json_grid_result(const GridCoverResult& r) {
    Json j;
    j["covered"] = r.covered;
    j["steps"] = r.steps;
    return j;
}

Json make_document(const std::string& command, const std::vector<InputSpec>& inputs,
                   Json payload) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["generator"] = kToolVersion;
    doc["command"] = command;
    Json in = Json::array();
    bool any_irrational = false;
    for (const InputSpec& s : inputs) {
        in.push_back(json_input(s));
        any_irrational = any_irrational || !s.translation.is_rational();
    }
    doc["inputs"] = in;
    Json notes = Json::array();
    if (any_irrational)
        notes.push_back(
            "the declared irrational symbols are assumed Q-linearly independent "
            "together with 1 (user assertion, not verified)");
    doc["assumptions"] = notes;
    doc["result"] = std::move(payload);
    return doc;
}

std::string serialize_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace toral
