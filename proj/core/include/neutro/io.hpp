#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "neutro/decomposition.hpp"
#include "neutro/entropy.hpp"
#include "neutro/triple.hpp"

namespace neutro {

/// Text formats for record streams.
enum class Format { Csv, Jsonl };

/// One input row: an optional opaque label and a validated triple.
struct Record {
    std::optional<std::string> id;
    Triple triple;
};

/// One fully evaluated row: the triple with its indices, kind, both entropy
/// values, and both decompositions.
struct ResultRow {
    std::optional<std::string> id;
    Triple triple;
    Indices indices;
    Kind kind;
    double entropy_c;
    double entropy_r;
    Hepta hepta_c;
    Hepta hepta_r;
};

/// Computes everything for one record (default classification tolerance).
ResultRow evaluate_record(const Record& r, Tolerance tol = {});

struct ParseOptions {
    Format format = Format::Csv;
    /// When set, finite out-of-range values are clamped to [0,1] instead of
    /// rejected; NaN and infinity are rejected regardless.
    bool clamp = false;
};

struct ParseOutcome {
    std::vector<Record> records;
    std::size_t clamped = 0;  ///< number of values clamped (0 unless clamp set)
};

/// Reads records from a UTF-8 text stream.
///
/// CSV: mandatory header with columns mu, omega, nu (optional id), any order,
/// case-insensitive; unknown columns ignored; duplicate known columns are an
/// error. JSONL: one object per line with numeric keys mu, omega, nu and an
/// optional string id. Blank lines are skipped; CRLF is tolerated.
///
/// Throws ParseError (malformed text) or DomainError (out-of-range value),
/// both naming the 1-based line.
ParseOutcome parse_records(std::istream& in, const ParseOptions& opts);

/// Writes rows in input order. CSV columns, in this order:
///   id, mu, omega, nu, tau, pi, kappa, alpha, kind, entropy_c, entropy_r,
///   t_c, f_c, a_c, u_c, c_c, n_c, s_c, t_r, f_r, a_r, u_r, c_r, n_r, s_r
/// JSONL uses the same keys (id omitted when absent). Numbers carry 12
/// significant digits; lines end with LF.
void emit_results(const std::vector<ResultRow>& rows, Format format, std::ostream& out);

/// Serializes one double with 12 significant digits (printf %.12g).
std::string format_number(double value);

/// Escapes a string for embedding in a JSON literal (quotes, backslashes,
/// control characters; everything else passes through byte by byte).
std::string json_escape(std::string_view s);

/// The sixteen scalars a grid sweep can tabulate: the two entropies plus the
/// seven components under either variant.
enum class Quantity {
    EntropyC, EntropyR,
    TruthC, FalsityC, AmbiguityC, IgnoranceC, ContradictionC, NeutralityC, SaturationC,
    TruthR, FalsityR, AmbiguityR, IgnoranceR, ContradictionR, NeutralityR, SaturationR,
};

/// Maps a quantity name to the scalar. Accepts "entropy_c" / "entropy_r"
/// (variant ignored) and the component letters t, f, a, u, c, n, s combined
/// with the variant. Returns nullopt for unknown names.
std::optional<Quantity> parse_quantity(std::string_view name, Variant variant);

/// Canonical scalar name ("entropy_c", "t_c", ..., "s_r").
std::string_view quantity_name(Quantity q) noexcept;

double evaluate_quantity(Quantity q, const Triple& t);

/// A sweep of one scalar over the (mu, nu) square at a fixed neutrality.
struct GridSpec {
    double omega = 0.0;
    int resolution = 2;  ///< lattice points per axis, >= 2
    Quantity quantity = Quantity::EntropyC;
};

/// Lattice values in row-major order: rows indexed by nu, columns by mu,
/// both ascending over {k / (resolution - 1)}.
struct Grid {
    GridSpec spec;
    std::vector<double> values;
};

/// Evaluates the scalar on the lattice. Throws DomainError for resolution < 2
/// or omega outside [0,1].
Grid evaluate_grid(const GridSpec& spec);

/// CSV table with columns mu, nu, value; mu varies fastest.
std::string grid_table_csv(const Grid& grid);

/// Binary PPM (P6) bytes: header "P6\n<w> <h>\n255\n" then one grayscale RGB
/// pixel per lattice point, 0.0 black to 1.0 white, row 0 at nu = 0 and
/// column 0 at mu = 0. Size is exactly header + 3 * resolution^2 bytes.
std::string grid_ppm(const Grid& grid);

}  // namespace neutro
