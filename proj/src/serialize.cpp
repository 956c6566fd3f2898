#include "yhx/serialize.hpp"

#include <sstream>

namespace yhx::io {

using algebra::GenSym;

namespace {

// appends a signed term to a sum under construction
void join_term(std::string& out, const Rat& coeff, const std::string& suffix) {
    if (out.empty()) {
        out += rat_str(coeff);
    } else if (coeff >= 0) {
        out += "+" + rat_str(coeff);
    } else {
        out += "-" + rat_str(Rat(-coeff));
    }
    out += suffix;
}

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void expect(char c) {
        if (peek() != c) throw Error("scalar parse error at position " + std::to_string(pos));
        ++pos;
    }
    long read_long() {
        size_t start = pos;
        if (peek() == '-') ++pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw Error("scalar parse error: expected integer");
        return std::stol(s.substr(start, pos - start));
    }
    Rat read_rat() {
        size_t start = pos;
        if (peek() == '-') ++pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (peek() == '/') {
            ++pos;
            while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return parse_rat(s.substr(start, pos - start));
    }
};

}  // namespace

std::string cyclo_str(const Cyclo& c, long order) {
    Cyclo lifted = c.lift(order);
    std::string out;
    const auto& coeffs = lifted.coeffs();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        join_term(out, coeffs[k], k == 0 ? "" : "*z^" + std::to_string(k));
    }
    return out.empty() ? "0" : out;
}

Cyclo parse_cyclo(const std::string& s, long order) {
    Cursor cur{s};
    const auto& ctx = scalars::CycloContext::get(order);
    std::vector<Rat> coeffs(ctx.deg, Rat(0));
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (!first) {
            if (cur.peek() == '+') {
                cur.expect('+');
            } else if (cur.peek() == '-') {
                sign = -1;
                cur.expect('-');
            } else {
                throw Error("cyclotomic parse error: expected + or -");
            }
        }
        Rat coeff = cur.read_rat();
        if (sign < 0) coeff = -coeff;
        long k = 0;
        if (cur.peek() == '*') {
            cur.expect('*');
            cur.expect('z');
            cur.expect('^');
            k = cur.read_long();
        }
        if (k < 0 || k >= ctx.deg) throw Error("cyclotomic parse error: exponent out of range");
        coeffs[k] += coeff;
        first = false;
    }
    return Cyclo(order, coeffs);
}

std::string laurent_str(const Laurent& l, long order) {
    if (l.is_zero()) return "0";
    std::string out;
    for (int e = l.lo(); e <= l.hi(); ++e) {
        const Cyclo& c = l.coeffs()[e - l.lo()];
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        out += "(" + cyclo_str(c, order) + ")*q^" + std::to_string(e);
    }
    return out;
}

Laurent parse_laurent(const std::string& s, long order) {
    if (s == "0") return Laurent::zero();
    Cursor cur{s};
    Laurent acc;
    while (!cur.done()) {
        if (cur.peek() == '+') cur.expect('+');
        cur.expect('(');
        size_t depth = 1, start = cur.pos;
        while (!cur.done() && depth > 0) {
            if (cur.peek() == '(') ++depth;
            if (cur.peek() == ')') --depth;
            ++cur.pos;
        }
        if (depth != 0) throw Error("laurent parse error: unbalanced parentheses");
        std::string inner = cur.s.substr(start, cur.pos - 1 - start);
        cur.expect('*');
        cur.expect('q');
        cur.expect('^');
        long e = cur.read_long();
        acc = acc + Laurent::q_power(static_cast<int>(e), parse_cyclo(inner, order));
    }
    return acc;
}

std::string tower_str(const TowerScalar& t, long order) {
    if (t.den().is_one()) return laurent_str(t.num(), order);
    return "(" + laurent_str(t.num(), order) + ")/(" + laurent_str(t.den(), order) + ")";
}

TowerScalar parse_tower(const std::string& s, long order) {
    // top-level form (NUM)/(DEN): find ")/(" at depth 1->0
    if (!s.empty() && s.front() == '(') {
        size_t depth = 0;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') {
                --depth;
                if (depth == 0) {
                    if (i + 2 < s.size() && s[i + 1] == '/' && s[i + 2] == '(' &&
                        s.back() == ')') {
                        std::string num = s.substr(1, i - 1);
                        std::string den = s.substr(i + 3, s.size() - i - 4);
                        return TowerScalar(parse_laurent(num, order), parse_laurent(den, order));
                    }
                    break;
                }
            }
        }
    }
    return TowerScalar::from_laurent(parse_laurent(s, order));
}

std::string ff_str(const FFElem& e) {
    std::string out;
    for (int k = 0; k < e.ctx()->k; ++k) {
        if (e.coeffs()[k] == 0) continue;
        if (!out.empty()) out += "+";
        out += std::to_string(e.coeffs()[k]);
        if (k > 0) out += "*z^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

FFElem parse_ff(const std::string& s, const FFContext& ctx) {
    Cursor cur{s};
    std::vector<uint32_t> coeffs(ctx.k, 0);
    bool first = true;
    while (!cur.done()) {
        if (!first) cur.expect('+');
        long c = cur.read_long();
        long k = 0;
        if (cur.peek() == '*') {
            cur.expect('*');
            cur.expect('z');
            cur.expect('^');
            k = cur.read_long();
        }
        if (k < 0 || k >= ctx.k) throw Error("finite field parse error: exponent out of range");
        coeffs[k] = static_cast<uint32_t>(mod_floor(c + coeffs[k], ctx.p));
        first = false;
    }
    return ctx.from_coeffs(coeffs);
}

json shape_to_json(const shapes::PlacedShape& p) {
    json j;
    j["outer"] = p.shape().outer().comps();
    j["inner"] = p.shape().inner().comps();
    json contents = json::array();
    for (long i = 0; i < p.n(); ++i) {
        json c;
        c["u"] = rat_str(p.content(i).phase);
        c["a"] = p.content(i).offset;
        contents.push_back(std::move(c));
    }
    j["contents"] = std::move(contents);
    return j;
}

shapes::PlacedShape shape_from_json(const json& j) {
    auto outer = shapes::RPartition(j.at("outer").get<std::vector<std::vector<long>>>());
    auto inner_raw = j.at("inner").get<std::vector<std::vector<long>>>();
    if (inner_raw.empty()) inner_raw.assign(outer.r(), {});
    auto inner = shapes::RPartition(inner_raw);
    auto shape = build_skew(outer, inner);
    std::vector<shapes::ContentValue> contents;
    for (const auto& c : j.at("contents"))
        contents.emplace_back(parse_rat(c.at("u").get<std::string>()), c.at("a").get<long>());
    return place(shape, std::move(contents));
}

json module_to_json(const calrep::CalibratedModule& m) {
    json j;
    j["kind"] = "calibrated_module";
    j["r"] = m.placed.r();
    j["n"] = m.n();
    j["dim"] = m.dim();
    j["cyclo_order"] = m.cyclo_order;
    j["shape"] = shape_to_json(m.placed);
    json basis = json::array();
    for (const auto& t : m.basis) basis.push_back(t.entries());
    j["basis"] = std::move(basis);
    json weights = json::array();
    for (long b = 0; b < m.dim(); ++b) {
        json w;
        w["t"] = m.tcomp[b];
        json xs = json::array();
        for (const auto& v : m.nu[b]) xs.push_back(tower_str(v, m.cyclo_order));
        w["x"] = std::move(xs);
        weights.push_back(std::move(w));
    }
    j["weights"] = std::move(weights);
    json mats;
    auto str = [&](const TowerScalar& v) { return tower_str(v, m.cyclo_order); };
    for (const auto& [sym, mat] : m.rep.mats) mats[sym.str()] = matrix_to_json(mat, str);
    j["matrices"] = std::move(mats);
    return j;
}

ParsedModule module_rep_from_json(const json& j) {
    ParsedModule out;
    out.r = j.at("r").get<long>();
    out.n = j.at("n").get<int>();
    out.cyclo_order = j.at("cyclo_order").get<long>();
    out.rep.r = out.r;
    out.rep.n = out.n;
    out.rep.dim = j.at("dim").get<long>();
    out.rep.zero = TowerScalar::zero();
    out.rep.one = TowerScalar::one();
    for (const auto& [name, mj] : j.at("matrices").items()) {
        GenSym sym = algebra::t_(1);
        if (name.rfind("Xinv", 0) == 0)
            sym = algebra::Xinv_(std::stoi(name.substr(4)));
        else if (name[0] == 'X')
            sym = algebra::X_(std::stoi(name.substr(1)));
        else if (name[0] == 't')
            sym = algebra::t_(std::stoi(name.substr(1)));
        else if (name[0] == 'g')
            sym = algebra::g_(std::stoi(name.substr(1)));
        else if (name[0] == 'f')
            sym = algebra::f_(std::stoi(name.substr(1)));
        else if (name[0] == 'x')
            sym = algebra::x_(std::stoi(name.substr(1)));
        else
            throw Error("module parse error: unknown matrix name " + name);
        long rows = mj.at("rows").get<long>(), cols = mj.at("cols").get<long>();
        Matrix<TowerScalar> mat(rows, cols, TowerScalar::zero());
        if (mj.contains("dense")) {
            const auto& rowsj = mj.at("dense");
            for (long i = 0; i < rows; ++i)
                for (long c = 0; c < cols; ++c)
                    mat.at(i, c) =
                        parse_tower(rowsj.at(i).at(c).get<std::string>(), out.cyclo_order);
        } else {
            for (const auto& trip : mj.at("triples"))
                mat.at(trip.at(0).get<long>(), trip.at(1).get<long>()) =
                    parse_tower(trip.at(2).get<std::string>(), out.cyclo_order);
        }
        out.rep.set(sym, std::move(mat));
    }
    return out;
}

json report_to_json(const algebra::CheckReport& rp) {
    json j;
    j["all_pass"] = rp.all_pass;
    j["checked"] = rp.items.size();
    json fails = json::array();
    for (const auto& f : rp.failures()) fails.push_back(f);
    j["failures"] = std::move(fails);
    return j;
}

json degenerate_module_to_json(const degenerate::DegenerateModule& m) {
    json j;
    j["kind"] = "degenerate_module";
    j["p"] = m.p;
    j["r"] = m.r;
    j["n"] = m.n;
    j["dim"] = m.rep.dim;
    json field;
    field["p"] = m.field->p;
    field["k"] = m.field->k;
    field["poly"] = m.field->poly;
    field["extended"] = m.extended_field;
    field["zeta"] = ff_str(m.zeta);
    j["field"] = std::move(field);
    json weights = json::array();
    for (const auto& w : m.weights) {
        json wj;
        wj["alpha"] = w.alpha;
        wj["j"] = w.j;
        weights.push_back(std::move(wj));
    }
    j["weights"] = std::move(weights);
    json mats;
    auto str = [](const FFElem& v) { return ff_str(v); };
    for (const auto& [sym, mat] : m.rep.mats) mats[sym.str()] = matrix_to_json(mat, str);
    j["matrices"] = std::move(mats);
    return j;
}

}  // namespace yhx::io
