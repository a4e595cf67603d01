#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "toricnc/cubical.hpp"
#include "toricnc/ncpart.hpp"
#include "toricnc/poly.hpp"
#include "toricnc/toric.hpp"

namespace toricnc {

using json = nlohmann::ordered_json;

/// "(136)(2)(4)(5)" for d <= 9, "(1,3,6)(2)(4)(5)" with commas for larger d.
std::string partition_text(const NcPartition& p);
/// Accepts both forms (commas anywhere switch to the comma form); the ground
/// set size is the number of elements listed.
NcPartition parse_partition(const std::string& text);

/// "{[2,3],[4],[6,1]}", the full starred family "{[1,6]*}", empty "{}".
std::string family_text(const IntervalFamily& s);
IntervalFamily parse_family(int d, const std::string& text);

/// "8,12,6"
std::string fvector_text(const FVector& fv);
FVector parse_fvector(const std::string& text);

/// Lines "i j count"; '#' starts a comment. The dimension is not part of the
/// file and must be supplied.
CVector parse_cvector_file(int d, std::istream& in);

/// Integers that fit 64 bits render as JSON numbers, wider ones as decimal
/// strings; non-integer rationals as "num/den" strings.
json int_json(const Int& v);
json rat_json(const Rat& c);

/// Ascending coefficient list, "num/den" for non-integers: "0,2" for 2x.
std::string poly_csv(const Poly& p);
/// Array indexed by power; integers that fit 64 bits as numbers, everything
/// else as "num/den" strings.
json poly_json(const Poly& p);

json fvector_json(const FVector& fv);
json cvector_json(const CVector& c);
json qtable_json(const QTable& t);

/// { "d": n, "faces": [ { "dim": ..., "subfaces": [...] }, ... ] } with the
/// empty face at index 0.
json complex_json(const FaceComplex& p);
FaceComplex parse_complex_json(const json& j);

}  // namespace toricnc
