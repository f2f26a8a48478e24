#include "k3dyn/json_io.hpp"

#include <fstream>
#include <sstream>

namespace k3dyn {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

BigInt parse_big(const std::string& s) {
    BigRational r = parse_rational(s);
    if (denominator(r) != 1) throw ParseError("expected an integer: " + s);
    return numerator(r);
}

}  // namespace

Json quadext_to_json(const QuadExt& x) {
    Json j;
    j["rat"] = rational_to_string(x.rat());
    j["rad"] = rational_to_string(x.rad());
    j["d"] = x.disc();
    return j;
}

QuadExt quadext_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rat"))
        throw ParseError("QuadExt object needs rat/rad/d fields");
    BigRational p = parse_rational(j.at("rat").get<std::string>());
    BigRational q = j.contains("rad")
                        ? parse_rational(j.at("rad").get<std::string>())
                        : BigRational(0);
    std::int64_t d = j.value("d", std::int64_t{0});
    if (q == 0) return QuadExt(p);
    return QuadExt(p, q, d);
}

Json lattice_to_json(const PicLattice& l) {
    Json j;
    j["rank"] = l.rank;
    j["labels"] = l.basis_labels;
    j["gram"] = l.gram;
    j["ample_basis"] = l.ample_basis;
    j["canonical_class"] = l.canonical_class;
    j["d"] = l.field_disc;
    return j;
}

LatticePtr lattice_from_json(const Json& j) {
    try {
        return PicLattice::create(
            j.at("rank").get<int>(),
            j.at("labels").get<std::vector<std::string>>(),
            j.at("gram").get<std::vector<std::vector<std::int64_t>>>(),
            j.value("ample_basis", std::vector<int>{}),
            j.value("canonical_class", std::vector<std::int64_t>{}),
            j.value("d", std::int64_t{0}));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad lattice file: ") + e.what());
    }
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["claim"] = claim_name(v.claim);
    j["holds"] = v.holds;
    Json ev = Json::array();
    for (const auto& step : v.evidence) {
        Json s;
        s["step"] = step.step;
        if (step.value) s["value"] = quadext_to_json(*step.value);
        ev.push_back(std::move(s));
    }
    j["evidence"] = std::move(ev);
    return j;
}

Json surface22_to_json(const Wehler22Surface& s) {
    Json a = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(rational_to_string(s.a[i][j]));
        a.push_back(std::move(row));
    }
    Json b = Json::array();
    for (const auto& [key, v] : s.b) {
        Json e;
        e["exp"] = {key[0] + 1, key[1] + 1, key[2] + 1, key[3] + 1};
        e["value"] = rational_to_string(v);
        b.push_back(std::move(e));
    }
    Json j;
    j["type"] = "wehler_22";
    j["a"] = std::move(a);
    j["b"] = std::move(b);
    return j;
}

Wehler22Surface surface22_from_json(const Json& j) {
    Wehler22Surface s;
    try {
        const auto& a = j.at("a");
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                s.a[i][k] = parse_rational(a.at(i).at(k).get<std::string>());
        for (const auto& e : j.at("b")) {
            auto exp = e.at("exp").get<std::vector<int>>();
            if (exp.size() != 4) throw ParseError("b exponent needs 4 indices");
            s.set_b(exp[0] - 1, exp[1] - 1, exp[2] - 1, exp[3] - 1,
                    parse_rational(e.at("value").get<std::string>()));
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad wehler_22 surface: ") + e.what());
    }
    s.validate();
    return s;
}

Json surface222_to_json(const Wehler222Surface& s) {
    Json c = Json::array();
    for (const auto& [key, v] : s.c) {
        Json e;
        e["exp"] = {key[0], 2 - key[0], key[1], 2 - key[1], key[2], 2 - key[2]};
        e["value"] = rational_to_string(v);
        c.push_back(std::move(e));
    }
    Json j;
    j["type"] = "wehler_222";
    j["coefficients"] = std::move(c);
    return j;
}

Wehler222Surface surface222_from_json(const Json& j) {
    Wehler222Surface s;
    try {
        for (const auto& e : j.at("coefficients")) {
            auto exp = e.at("exp").get<std::vector<int>>();
            if (exp.size() != 6) throw ParseError("exponent needs 6 entries");
            for (int l = 0; l < 3; ++l)
                if (exp[2 * l] + exp[2 * l + 1] != 2)
                    throw ParseError("exponents must satisfy i+j=2 per factor");
            s.set_c(exp[0], exp[2], exp[4],
                    parse_rational(e.at("value").get<std::string>()));
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad wehler_222 surface: ") + e.what());
    }
    s.validate();
    return s;
}

AnySurface surface_from_json(const Json& j) {
    AnySurface out;
    std::string type = j.value("type", "");
    if (type == "wehler_22")
        out.s22 = surface22_from_json(j);
    else if (type == "wehler_222")
        out.s222 = surface222_from_json(j);
    else
        throw ParseError("unknown surface type: '" + type + "'");
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

SurfacePoint222 parse_point_222(const std::string& text) {
    auto factors = split(text, ',');
    if (factors.size() != 3)
        throw ParseError("expected x0:x1,y0:y1,z0:z1");
    P1Point pts[3];
    for (int i = 0; i < 3; ++i) {
        auto coords = split(factors[i], ':');
        if (coords.size() != 2) throw ParseError("P¹ point needs 2 coordinates");
        pts[i] = P1Point(parse_big(coords[0]), parse_big(coords[1]));
    }
    return {pts[0], pts[1], pts[2]};
}

SurfacePoint22 parse_point_22(const std::string& text) {
    auto factors = split(text, ';');
    if (factors.size() != 2)
        throw ParseError("expected x0:x1:x2;y0:y1:y2");
    P2Point pts[2];
    for (int i = 0; i < 2; ++i) {
        auto coords = split(factors[i], ':');
        if (coords.size() != 3) throw ParseError("P² point needs 3 coordinates");
        pts[i] = P2Point(parse_big(coords[0]), parse_big(coords[1]),
                         parse_big(coords[2]));
    }
    return {pts[0], pts[1]};
}

}  // namespace k3dyn
