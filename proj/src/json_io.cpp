#include "umlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "umlab/error.hpp"

namespace umlab {

namespace {

int parse_int(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return (int)v;
    } catch (const std::exception&) {
        fail(ErrCode::BadInput, std::string("malformed integer for ") + what + ": " + s);
    }
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) fail(ErrCode::BadInput, std::string("missing field: ") + name);
    return *it;
}

} // namespace

Json base_to_json(const LocalBase& b) {
    Json j = Json::object();
    switch (b.kind) {
        case BaseKind::RationalField: j["kind"] = "Q"; break;
        case BaseKind::PrimeField:
            j["kind"] = "Fp";
            j["p"] = b.p;
            break;
        case BaseKind::IntegersLocalizedAt:
            j["kind"] = "Zp";
            j["p"] = b.p;
            break;
        case BaseKind::Integers: j["kind"] = "Z"; break;
    }
    return j;
}

LocalBase base_from_json(const Json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "Q") return LocalBase::Q();
    if (kind == "Z") return LocalBase::Z();
    unsigned long p = field(j, "p").get<unsigned long>();
    if (p < 2) fail(ErrCode::BadInput, "base: p must be a prime >= 2");
    if (kind == "Fp") return LocalBase::Fp(p);
    if (kind == "Zp") return LocalBase::Zp(p);
    fail(ErrCode::BadInput, "base: unknown kind " + kind);
}

Json lp_to_json(const LaurentPoly& a) {
    Json j = Json::object();
    for (const auto& [e, c] : a.coeffs) j[std::to_string(e)] = a.base.to_string(c);
    return j;
}

LaurentPoly lp_from_json(const Json& j, const LocalBase& base) {
    if (!j.is_object()) fail(ErrCode::BadInput, "laurent polynomial: expected object");
    LaurentPoly a(base);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int e = parse_int(it.key(), "exponent");
        a.set(e, base.parse(it.value().get<std::string>()));
    }
    return a;
}

Json series_to_json(const TruncSeries& s) {
    Json j = Json::object();
    j["base"] = base_to_json(s.base);
    j["precision"] = s.precision;
    Json c = Json::object();
    for (const auto& [e, v] : s.coeffs) c[std::to_string(e)] = s.base.to_string(v);
    j["coeffs"] = c;
    return j;
}

TruncSeries series_from_json(const Json& j) {
    LocalBase base = base_from_json(field(j, "base"));
    TruncSeries s(base, field(j, "precision").get<int>());
    const Json& c = field(j, "coeffs");
    if (!c.is_object()) fail(ErrCode::BadInput, "series: coeffs must be an object");
    for (auto it = c.begin(); it != c.end(); ++it) {
        int e = parse_int(it.key(), "exponent");
        if (e >= s.precision) fail(ErrCode::BadInput, "series: coefficient beyond precision");
        s.set(e, base.parse(it.value().get<std::string>()));
    }
    return s;
}

Json mat_to_json(const LaurentMat& m) {
    Json j = Json::object();
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols; ++k) row.push_back(lp_to_json(m.at(i, k)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

LaurentMat mat_from_json(const Json& j, const LocalBase& base) {
    int rows = field(j, "rows").get<int>();
    int cols = field(j, "cols").get<int>();
    if (rows < 0 || cols < 0) fail(ErrCode::BadInput, "matrix: negative dimension");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || (int)entries.size() != rows)
        fail(ErrCode::BadInput, "matrix: entry rows do not match declared size");
    LaurentMat m(base, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = entries[i];
        if (!row.is_array() || (int)row.size() != cols)
            fail(ErrCode::BadInput, "matrix: entry cols do not match declared size");
        for (int k = 0; k < cols; ++k) m.at(i, k) = lp_from_json(row[k], base);
    }
    return m;
}

Json bundle_to_json(const RowBundle& b) {
    Json j = Json::object();
    j["base"] = base_to_json(b.base);
    Json row = Json::array(), comp = Json::array();
    for (const auto& x : b.row) row.push_back(lp_to_json(x));
    for (const auto& y : b.complement) comp.push_back(lp_to_json(y));
    j["row"] = row;
    j["complement"] = comp;
    j["unit_witness"] = lp_to_json(b.unit_witness);
    if (b.gen) {
        Json g = Json::object();
        g["seed"] = std::to_string(b.gen->seed);
        g["steps"] = b.gen->steps;
        j["gen"] = g;
    }
    return j;
}

RowBundle bundle_from_json(const Json& j) {
    RowBundle b;
    b.base = base_from_json(field(j, "base"));
    const Json& row = field(j, "row");
    const Json& comp = field(j, "complement");
    if (!row.is_array() || !comp.is_array() || row.size() != comp.size() || row.size() < 2)
        fail(ErrCode::BadInput, "bundle: row/complement must be arrays of equal length >= 2");
    for (const auto& x : row) b.row.push_back(lp_from_json(x, b.base));
    for (const auto& y : comp) b.complement.push_back(lp_from_json(y, b.base));
    b.unit_witness = lp_from_json(field(j, "unit_witness"), b.base);
    if (j.contains("gen")) {
        GenInfo g;
        try {
            g.seed = std::stoull(field(j["gen"], "seed").get<std::string>());
        } catch (const std::exception&) {
            fail(ErrCode::BadInput, "bundle: malformed gen.seed");
        }
        g.steps = field(j["gen"], "steps").get<int>();
        b.gen = g;
    }
    return b;
}

Json certificate_to_json(const BezoutCertificate& c) {
    Json j = Json::object();
    Json cof = Json::array();
    for (const auto& x : c.cofactors) cof.push_back(lp_to_json(x));
    j["cofactors"] = cof;
    j["target_exponent"] = c.target_exponent;
    return j;
}

BezoutCertificate certificate_from_json(const Json& j, const LocalBase& base) {
    BezoutCertificate c;
    const Json& cof = field(j, "cofactors");
    if (!cof.is_array()) fail(ErrCode::BadInput, "certificate: cofactors must be an array");
    for (const auto& x : cof) c.cofactors.push_back(lp_from_json(x, base));
    c.target_exponent = field(j, "target_exponent").get<int>();
    return c;
}

Json witness_to_json(const GLWitness& w) {
    Json j = Json::object();
    j["matrix"] = mat_to_json(w.matrix);
    j["det_witness"] = lp_to_json(w.det_witness);
    Json prov = Json::array();
    for (const auto& f : w.provenance) {
        Json g = Json::object();
        switch (f.type) {
            case GLFactor::Elementary:
                g["type"] = "elementary";
                g["j"] = f.j;
                g["i"] = f.i;
                g["coeff"] = lp_to_json(f.coeff);
                break;
            case GLFactor::Shift:
                g["type"] = "shift";
                g["n"] = f.shift_n;
                break;
            case GLFactor::Correction: {
                g["type"] = "correction";
                g["matrix"] = mat_to_json(f.corr);
                Json u = Json::array(), w2 = Json::array();
                for (const auto& x : f.corr_u) u.push_back(lp_to_json(x));
                for (const auto& x : f.corr_w) w2.push_back(lp_to_json(x));
                g["u"] = u;
                g["w"] = w2;
                break;
            }
        }
        prov.push_back(g);
    }
    j["provenance"] = prov;
    return j;
}

GLWitness witness_from_json(const Json& j, const LocalBase& base) {
    GLWitness w;
    w.matrix = mat_from_json(field(j, "matrix"), base);
    w.det_witness = lp_from_json(field(j, "det_witness"), base);
    const Json& prov = field(j, "provenance");
    if (!prov.is_array()) fail(ErrCode::BadInput, "witness: provenance must be an array");
    for (const auto& g : prov) {
        GLFactor f;
        std::string type = field(g, "type").get<std::string>();
        if (type == "elementary") {
            f.type = GLFactor::Elementary;
            f.j = field(g, "j").get<int>();
            f.i = field(g, "i").get<int>();
            f.coeff = lp_from_json(field(g, "coeff"), base);
        } else if (type == "shift") {
            f.type = GLFactor::Shift;
            f.shift_n = field(g, "n").get<int>();
        } else if (type == "correction") {
            f.type = GLFactor::Correction;
            f.corr = mat_from_json(field(g, "matrix"), base);
            for (const auto& x : field(g, "u")) f.corr_u.push_back(lp_from_json(x, base));
            for (const auto& x : field(g, "w")) f.corr_w.push_back(lp_from_json(x, base));
        } else {
            fail(ErrCode::BadInput, "witness: unknown factor type " + type);
        }
        w.provenance.push_back(std::move(f));
    }
    return w;
}

Json reduction_result_to_json(const ReductionResult& r) {
    Json j = Json::object();
    j["input"] = bundle_to_json(r.input);
    j["precision"] = r.precision;
    j["k"] = r.k;
    j["ell"] = r.ell;
    Json row = Json::array();
    for (const auto& x : r.row) row.push_back(lp_to_json(x));
    j["row"] = row;
    j["certificate"] = certificate_to_json(r.certificate);
    j["witness"] = witness_to_json(r.witness);
    return j;
}

ReductionResult reduction_result_from_json(const Json& j) {
    ReductionResult r;
    r.input = bundle_from_json(field(j, "input"));
    r.precision = field(j, "precision").get<int>();
    r.k = field(j, "k").get<int>();
    r.ell = field(j, "ell").get<int>();
    const Json& row = field(j, "row");
    if (!row.is_array()) fail(ErrCode::BadInput, "result: row must be an array");
    for (const auto& x : row) r.row.push_back(lp_from_json(x, r.input.base));
    r.certificate = certificate_from_json(field(j, "certificate"), r.input.base);
    r.witness = witness_from_json(field(j, "witness"), r.input.base);
    return r;
}

Json mv_to_json(const MvPoly& p) {
    Json j = Json::object();
    j["vars"] = p.vars;
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms) {
        Json t = Json::object();
        t["exp"] = e;
        t["coeff"] = p.base.to_string(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

MvPoly mv_from_json(const Json& j, const LocalBase& base) {
    MvPoly p(base, field(j, "vars").get<std::vector<std::string>>());
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) fail(ErrCode::BadInput, "polynomial: terms must be an array");
    for (const auto& t : terms) {
        ExpVec e = field(t, "exp").get<ExpVec>();
        if (e.size() != p.vars.size()) fail(ErrCode::BadInput, "polynomial: exponent arity");
        p.add_term(e, base.parse(field(t, "coeff").get<std::string>()));
    }
    return p;
}

Json presentation_to_json(const RingPresentation& p) {
    Json j = Json::object();
    j["base"] = base_to_json(p.base);
    Json vars = Json::array();
    for (size_t i = 0; i < p.vars.size(); ++i) {
        Json v = Json::object();
        v["name"] = p.vars[i];
        v["grade"] = p.grades[i];
        vars.push_back(v);
    }
    j["vars"] = vars;
    Json rels = Json::array();
    for (size_t i = 0; i < p.relations.size(); ++i) {
        Json rel = Json::object();
        rel["degree"] = p.relation_degrees[i];
        rel["poly"] = mv_to_json(p.relations[i]);
        rels.push_back(rel);
    }
    j["relations"] = rels;
    Json inv = Json::array();
    for (const auto& q : p.inverted) inv.push_back(mv_to_json(q));
    j["inverted"] = inv;
    Json meta = Json::object();
    meta["r"] = p.r;
    meta["k"] = p.k;
    meta["n"] = p.n;
    j["meta"] = meta;
    return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrCode::BadInput, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        fail(ErrCode::BadInput, "malformed JSON in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrCode::BadInput, "cannot write " + path);
    out << dump_canonical(j);
    if (!out) fail(ErrCode::BadInput, "write failed for " + path);
}

} // namespace umlab
