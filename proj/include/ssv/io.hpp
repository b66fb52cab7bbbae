/*
  io.hpp

  Serialization of polynomials and walk tables in three formats: a
  readable text form that factors coefficients the way the reference
  tables print them, a faithful JSON form that round-trips exactly, and
  a LaTeX emitter. Also the loader for the checked-in golden tables.

  All output is deterministic: term order is the lexicographic exponent
  order of the underlying maps, and parameter monomials follow the
  graded-lex order of the coefficient field.
*/
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ssv/formulas.hpp"
#include "ssv/laurent.hpp"
#include "ssv/walks.hpp"
#include "ssv/words.hpp"

namespace ssv {

enum class OutputFormat { text, json, latex };

// Identifying data carried alongside a serialized polynomial. The
// object string names what was computed ("E", "P", "TuE", "E_q0",
// "E_qinf", "P_q0", "P_qinf"); u is the 1-based one-line permutation
// and is present only for "TuE".
struct PolynomialHeader {
    int r = 0;
    int n = 0;
    Exponent mu;
    std::string object;
    std::string normalization;
    std::vector<int> u;
};

std::string format_text(const LaurentPolynomial& f);
std::string format_json(const LaurentPolynomial& f, const PolynomialHeader& header);
std::string format_latex(const LaurentPolynomial& f, const PolynomialHeader& header);
std::string format_polynomial(const LaurentPolynomial& f, const PolynomialHeader& header,
                              OutputFormat format);

struct ParsedPolynomial {
    PolynomialHeader header;
    LaurentPolynomial poly;
};

// Inverse of format_json; the reconstructed polynomial is structurally
// identical to the serialized one.
ParsedPolynomial parse_polynomial_json(const std::string& text);

// One row per fold choice of the type word of mu, with the per-walk
// end data and contribution to the unnormalized sum.
struct WalkTableRow {
    AlcoveWalk walk;
    Exponent exponent;
    Scalar coefficient;
};

struct WalkTable {
    int r = 0;
    int n = 0;
    Exponent mu;
    ReducedDecomposition dec;
    std::vector<WalkTableRow> rows;
};

WalkTable build_walk_table(const Exponent& mu, const MetaplecticContext& ctx);
std::string format_walk_table_text(const WalkTable& table);
std::string format_walk_table_json(const WalkTable& table);

// Checked-in golden tables. Terms keep the printed fractions verbatim
// as expression strings; repeated exponents within one entry are
// summed when the polynomial is materialized.
struct GoldenTerm {
    Exponent exp;
    std::string coeff;
};

struct GoldenEntry {
    Exponent mu;
    int n = 0;
    std::vector<GoldenTerm> terms;
};

struct GoldenTable {
    std::string object;
    int r = 0;
    std::string normalization;
    std::vector<GoldenEntry> entries;
};

GoldenTable load_golden_table(const std::filesystem::path& path);

// Directory holding the golden tables: the SSV_DATA_DIR environment
// variable when set, otherwise the build-time data path.
std::filesystem::path data_directory();

LaurentPolynomial golden_polynomial(const GoldenEntry& entry, int rank);

} // namespace ssv
