#include "weylem/json_io.hpp"

#include "weylem/weylmod.hpp"

namespace weylem::io {

static mpq_class parse_rational(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

Scalar parse_scalar(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw error("parse_scalar: empty");
    if (s.front() == '[') {
        if (s.back() != ']') throw error("parse_scalar: unterminated [c0, c1]");
        std::string body = s.substr(1, s.size() - 2);
        auto comma = body.find(',');
        if (comma == std::string::npos) throw error("parse_scalar: expected two coefficients");
        return Scalar(parse_rational(body.substr(0, comma)),
                      parse_rational(body.substr(comma + 1)));
    }
    return Scalar(parse_rational(s));
}

std::string scalar_str(const Scalar& s) { return s.str(); }

ring::WeightFunction parse_psi(const ordered_json& j, int rank) {
    if (!j.is_object()) throw error("psi must be a JSON object {point: [coefficients...]}");
    ring::WeightFunction psi;
    for (auto it = j.begin(); it != j.end(); ++it) {
        Scalar p = parse_scalar(it.key());
        if (!it.value().is_array() || int(it.value().size()) != rank)
            throw error("psi values must be weight vectors of length " + std::to_string(rank));
        lie::Weight w;
        for (const auto& c : it.value()) w.push_back(c.get<long>());
        if (!std::all_of(w.begin(), w.end(), [](long c) { return c >= 0; }))
            throw error("psi values must be dominant weights");
        psi.insert_add(p, w);
    }
    return psi;
}

ordered_json psi_json(const ring::WeightFunction& psi) {
    ordered_json out = ordered_json::object();
    for (const auto& [p, w] : psi.support) out[scalar_str(p)] = w;
    return out;
}

ordered_json fold_json(const Scenario& sc) {
    const auto& fd = *sc.fd;
    ordered_json out;
    out["scenario"] = sc.name;
    out["base_field"] = field::minpoly_name();
    out["ambient_type"] = sc.L->root_system().label();
    out["ambient_rank"] = sc.L->rank();
    out["ambient_cartan"] = sc.L->root_system().cartan_matrix();
    out["gamma_order"] = fd.gamma_order();
    out["folded_type"] = fd.folded_label;
    ordered_json orbits = ordered_json::array();
    for (size_t k = 0; k < fd.orbits.size(); ++k) {
        ordered_json o;
        ordered_json nodes = ordered_json::array();
        for (int i : fd.orbits[k]) nodes.push_back(i + 1);  // 1-based labels
        o["nodes"] = nodes;
        o["kappa"] = fd.kappa[k];
        o["isotropy_order"] = fd.isotropy_order[k];
        orbits.push_back(o);
    }
    out["orbits"] = orbits;
    out["folded_cartan"] = fd.folded_cartan;
    return out;
}

ordered_json ema_json(const ema::TruncatedEMA& E) {
    ordered_json out;
    out["dimension"] = E.dim();
    out["truncation_exponent"] = E.quotient().N();
    ordered_json basis = ordered_json::array();
    for (int i = 0; i < E.dim(); ++i) {
        ordered_json b;
        b["xi"] = E.xi_of(i);
        b["ring_monomial"] = E.label(i).mono;
        b["weight"] = E.weight_of(i);
        b["part"] = E.part_of(i) < 0 ? "lowering" : E.part_of(i) > 0 ? "raising" : "cartan";
        basis.push_back(b);
    }
    out["basis"] = basis;
    ordered_json sc = ordered_json::array();
    for (int a = 0; a < E.dim(); ++a)
        for (int b = 0; b < E.dim(); ++b) {
            const auto& br = E.bracket(a, b);
            if (br.empty()) continue;
            ordered_json entry;
            entry["pair"] = {a, b};
            ordered_json terms = ordered_json::array();
            for (const auto& [i, c] : br) {
                ordered_json t;
                t["index"] = i;
                t["coefficient"] = c.str();
                terms.push_back(t);
            }
            entry["terms"] = terms;
            sc.push_back(entry);
        }
    out["structure_constants"] = sc;
    return out;
}

ordered_json character_json(const std::map<lie::Weight, int>& ch) {
    ordered_json out = ordered_json::array();
    for (const auto& [w, m] : ch) {
        ordered_json entry = ordered_json::array();
        entry.push_back(w);
        entry.push_back(m);
        out.push_back(entry);
    }
    return out;
}

ordered_json module_json(const weylmod::WeightModule& W) {
    ordered_json out;
    out["dimension"] = W.dim();
    out["zero_module"] = W.zero();
    if (!W.zero()) {
        out["lambda"] = W.lambda;
        out["character"] = character_json(W.character());
        out["stability"] = W.stable;
        out["truncation_exponent"] = W.alg->quotient().N();
        ordered_json ring;
        const auto& q = W.alg->quotient();
        ring["kind"] = q.ring().kind() == ring::GammaRing::Kind::Laurent ? "laurent" : "poly";
        ring["gamma_order"] = q.ring().gamma_order();
        ordered_json pts = ordered_json::array();
        for (const auto& p : q.points()) pts.push_back(p.str());
        ring["support"] = pts;
        ring["quotient_dimension"] = q.dim();
        out["ring"] = ring;
    }
    return out;
}

ordered_json descriptor_json(const weylalg::SymAlgebraDescriptor& d) {
    ordered_json out;
    out["zero_algebra"] = d.zero_algebra;
    ordered_json facs = ordered_json::array();
    for (const auto& f : d.factors) {
        ordered_json jf;
        jf["orbit"] = f.orbit;
        jf["node"] = f.node + 1;
        jf["multiplicity"] = f.r;
        jf["isotropy_order"] = f.isotropy;
        jf["presentation"] = f.presentation;
        facs.push_back(jf);
    }
    out["factors"] = facs;
    return out;
}

} // namespace weylem::io
