#pragma once

#include <json.hpp>

#include "yhx/calrep.hpp"
#include "yhx/degenerate.hpp"

namespace yhx::io {

using json = nlohmann::json;
using scalars::Cyclo;
using scalars::FFContext;
using scalars::FFElem;
using scalars::Laurent;
using scalars::TowerScalar;

// Canonical scalar grammar (bit-exact round trip):
//   rational      -?digits[/digits]
//   cyclotomic    sum of  rat | rat*z^k   (k >= 1, ascending), "0" when zero
//   Laurent       sum of  (cyclo)*q^e    (e ascending, always written), "0"
//   tower scalar  laurent | (laurent)/(laurent)
// Cyclotomic strings are relative to a declared order N; serialization lifts
// every coefficient into N first so equal values print identically.
std::string cyclo_str(const Cyclo& c, long order);
Cyclo parse_cyclo(const std::string& s, long order);

std::string laurent_str(const Laurent& l, long order);
Laurent parse_laurent(const std::string& s, long order);

std::string tower_str(const TowerScalar& t, long order);
TowerScalar parse_tower(const std::string& s, long order);

// finite field elements print in the same sum grammar with integer
// coefficients relative to the field's power basis
std::string ff_str(const FFElem& e);
FFElem parse_ff(const std::string& s, const FFContext& ctx);

// placed-shape schema: {"outer": [[..],..], "inner": [[..],..],
//                       "contents": [{"u": "p/q", "a": int}, ...]}
json shape_to_json(const shapes::PlacedShape& p);
shapes::PlacedShape shape_from_json(const json& j);

// matrices: dense rows of scalar strings up to dimension 64, explicit
// (row, col, value) triples above
template <class T, class Str>
json matrix_to_json(const Matrix<T>& m, Str&& str) {
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    if (m.rows() <= 64 && m.cols() <= 64) {
        json rows = json::array();
        for (long i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (long j = 0; j < m.cols(); ++j) row.push_back(str(m.at(i, j)));
            rows.push_back(std::move(row));
        }
        out["dense"] = std::move(rows);
    } else {
        json triples = json::array();
        for (long i = 0; i < m.rows(); ++i)
            for (long j = 0; j < m.cols(); ++j)
                if (!m.at(i, j).is_zero()) triples.push_back(json::array({i, j, str(m.at(i, j))}));
        out["triples"] = std::move(triples);
    }
    return out;
}

json module_to_json(const calrep::CalibratedModule& m);

// reconstructs the matrix representation (plus r, n, cyclotomic order) from a
// module file for independent re-checking
struct ParsedModule {
    long r = 1;
    int n = 0;
    long cyclo_order = 1;
    algebra::MatrixRep<TowerScalar> rep;
};
ParsedModule module_rep_from_json(const json& j);

json report_to_json(const algebra::CheckReport& rp);
json degenerate_module_to_json(const degenerate::DegenerateModule& m);

}  // namespace yhx::io
