#include "qnl/json_io.hpp"

namespace qnl {

const char* wedge_key(int k) {
    static const char* keys[6] = {"e12", "e13", "e14", "e23", "e24", "e34"};
    return keys[k];
}

json scalar_to_json(const Rat& r) { return r.str(); }

Rat scalar_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return Rat(j.get<long long>());
        if (j.is_string()) return Rat::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
    throw ParseError("scalar must be an integer or a 'p/q' string");
}

json matrix_to_json(const Mat<Rat>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<Rat> matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix must be an array of arrays");
    int r = static_cast<int>(j.size()), c = static_cast<int>(j[0].size());
    Mat<Rat> m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(j[i].size()) != c) throw ParseError("ragged matrix rows");
        for (int k = 0; k < c; ++k) m(i, k) = scalar_from_json(j[i][k]);
    }
    return m;
}

namespace {

json components_to_json(const std::array<QuadraticFormMatrix, 6>& comp) {
    json c = json::object();
    for (int k = 0; k < 6; ++k) c[wedge_key(k)] = matrix_to_json(comp[k].mat());
    return c;
}

std::array<QuadraticFormMatrix, 6> components_from_json(const json& j, int n) {
    std::array<QuadraticFormMatrix, 6> comp;
    for (int k = 0; k < 6; ++k) {
        if (!j.contains(wedge_key(k))) throw ParseError(std::string("missing component ") + wedge_key(k));
        Mat<Rat> m = matrix_from_json(j[wedge_key(k)]);
        if (m.rows() != n || m.cols() != n) throw ParseError("component has wrong shape");
        if (m != m.transpose()) throw ParseError("component is not symmetric");
        comp[k] = QuadraticFormMatrix(m);
    }
    return comp;
}

} // namespace

json net_to_json(const Net& a) {
    json j = json::object();
    j["n"] = a.n;
    j["components"] = components_to_json(a.comp);
    return j;
}

Net net_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("components")) throw ParseError("net needs 'n' and 'components'");
    Net a(j["n"].get<int>());
    a.comp = components_from_json(j["components"], a.n);
    return a;
}

json dualnet_to_json(const DualNet& d) {
    json j = json::object();
    j["kind"] = "qnl-dualnet-v1";
    j["m"] = d.m;
    j["components"] = components_to_json(d.comp);
    return j;
}

DualNet dualnet_from_json(const json& j) {
    if (j.value("kind", "") != std::string("qnl-dualnet-v1")) throw ParseError("expected kind qnl-dualnet-v1");
    DualNet d(j.at("m").get<int>());
    d.comp = components_from_json(j.at("components"), d.m);
    return d;
}

json twoform_dual_to_json(const TwoFormDual& w) {
    json j = json::object();
    for (int k = 0; k < 6; ++k) j[wedge_key(k)] = scalar_to_json(w[k]);
    return j;
}

namespace {
template <class W>
W six_from_json(const json& j) {
    W w;
    for (int k = 0; k < 6; ++k)
        if (j.contains(wedge_key(k))) w[k] = scalar_from_json(j[wedge_key(k)]);
    return w;
}
} // namespace

TwoFormDual twoform_dual_from_json(const json& j) { return six_from_json<TwoFormDual>(j); }
TwoForm twoform_from_json(const json& j) { return six_from_json<TwoForm>(j); }

json phimap_to_json(const PhiMap& p) {
    json j = json::object();
    j["kind"] = "qnl-phimap-v1";
    j["m"] = p.m;
    json rows = json::array();
    for (int i = 0; i < p.m; ++i) {
        json row = json::array();
        for (int k = 0; k < p.m; ++k) row.push_back(twoform_dual_to_json(p.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

PhiMap phimap_from_json(const json& j) {
    if (j.value("kind", "") != std::string("qnl-phimap-v1")) throw ParseError("expected kind qnl-phimap-v1");
    PhiMap p(j.at("m").get<int>());
    const json& e = j.at("entries");
    for (int i = 0; i < p.m; ++i)
        for (int k = 0; k < p.m; ++k) p.at(i, k) = twoform_dual_from_json(e.at(i).at(k));
    return p;
}

json mixedmap_to_json(const MixedMap& c) {
    json j = json::object();
    j["kind"] = "qnl-mixedmap-v1";
    j["rows"] = c.rows;
    j["cols"] = c.cols;
    json rows = json::array();
    for (int i = 0; i < c.rows; ++i) {
        json row = json::array();
        for (int k = 0; k < c.cols; ++k) row.push_back(twoform_dual_to_json(c.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

MixedMap mixedmap_from_json(const json& j) {
    if (j.value("kind", "") != std::string("qnl-mixedmap-v1")) throw ParseError("expected kind qnl-mixedmap-v1");
    MixedMap c(j.at("rows").get<int>(), j.at("cols").get<int>());
    const json& e = j.at("entries");
    for (int i = 0; i < c.rows; ++i)
        for (int k = 0; k < c.cols; ++k) c.at(i, k) = twoform_dual_from_json(e.at(i).at(k));
    return c;
}

json thooft_to_json(const THooftDatum& d) {
    json j = json::object();
    j["n"] = d.n;
    json terms = json::array();
    for (const auto& t : d.terms) {
        json jt = json::object();
        json h = json::array();
        for (const auto& x : t.h) h.push_back(scalar_to_json(x));
        jt["h"] = std::move(h);
        jt["w"] = twoform_dual_to_json(t.w);
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j;
}

THooftDatum thooft_from_json(const json& j) {
    THooftDatum d;
    d.n = j.at("n").get<int>();
    for (const auto& jt : j.at("terms")) {
        THooftDatum::Term t;
        for (const auto& x : jt.at("h")) t.h.push_back(scalar_from_json(x));
        t.w = twoform_dual_from_json(jt.at("w"));
        d.terms.push_back(std::move(t));
    }
    return d;
}

json quadblock_to_json(const QuadBlockSkew& b) {
    json j = json::object();
    j["m_plus_1"] = b.mp1;
    static const char* keys[6] = {"A12", "A13", "A14", "A23", "A24", "A34"};
    for (int k = 0; k < 6; ++k) j[keys[k]] = matrix_to_json(b.blocks[k].mat());
    return j;
}

QuadBlockSkew quadblock_from_json(const json& j) {
    QuadBlockSkew b(j.at("m_plus_1").get<int>());
    static const char* keys[6] = {"A12", "A13", "A14", "A23", "A24", "A34"};
    for (int k = 0; k < 6; ++k) {
        Mat<Rat> m = matrix_from_json(j.at(keys[k]));
        if (m != m.transpose()) throw ParseError("quadric block not symmetric");
        b.blocks[k] = QuadraticFormMatrix(m);
    }
    return b;
}

} // namespace qnl
