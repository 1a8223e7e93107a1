#include "neutro/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace neutro {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(std::string_view field, const char* name, std::size_t line) {
    const std::string_view token = trim(field);
    if (token.empty()) {
        throw ParseError(line, std::string("empty value for ") + name);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("malformed number for ") + name + ": '" +
                                   std::string(token) + "'");
    }
    return value;
}

double accept_value(double raw, const char* name, std::size_t line, bool clamp,
                    std::size_t& clamped) {
    if (!std::isfinite(raw)) {
        throw DomainError("line " + std::to_string(line) + ": " + name + " not finite",
                          name, line);
    }
    if (raw < 0.0 || raw > 1.0) {
        if (!clamp) {
            throw DomainError("line " + std::to_string(line) + ": " + name +
                                  " out of range [0,1]",
                              name, line);
        }
        ++clamped;
        return std::clamp(raw, 0.0, 1.0);
    }
    return raw;
}

std::optional<std::string> accept_id(std::string_view raw, std::size_t line) {
    if (raw.empty()) return std::nullopt;
    if (raw.find_first_of(",\r\n") != std::string_view::npos) {
        throw ParseError(line, "id contains a field delimiter");
    }
    return std::string(raw);
}

// Reads one logical line, stripping a trailing CR. Returns false at EOF.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++lineno;
    return true;
}

ParseOutcome parse_csv(std::istream& in, const ParseOptions& opts) {
    ParseOutcome out;
    std::string line;
    std::size_t lineno = 0;

    // Header: locate mu/omega/nu (mandatory) and id (optional); other
    // columns are ignored, duplicates of known ones rejected.
    if (!next_line(in, line, lineno)) {
        throw ParseError(1, "missing header row");
    }
    const auto header = split_fields(line);
    constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
    std::size_t col_mu = kMissing, col_omega = kMissing, col_nu = kMissing, col_id = kMissing;
    const auto bind = [&](std::size_t& slot, std::size_t index, const std::string& name) {
        if (slot != kMissing) {
            throw ParseError(lineno, "duplicate column " + name);
        }
        slot = index;
    };
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = lower(trim(header[i]));
        if (name == "mu") bind(col_mu, i, name);
        else if (name == "omega") bind(col_omega, i, name);
        else if (name == "nu") bind(col_nu, i, name);
        else if (name == "id") bind(col_id, i, name);
    }
    if (col_mu == kMissing) throw ParseError(lineno, "missing column mu");
    if (col_omega == kMissing) throw ParseError(lineno, "missing column omega");
    if (col_nu == kMissing) throw ParseError(lineno, "missing column nu");

    while (next_line(in, line, lineno)) {
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != header.size()) {
            throw ParseError(lineno, "expected " + std::to_string(header.size()) +
                                         " fields, got " + std::to_string(fields.size()));
        }
        const double mu = accept_value(parse_double(fields[col_mu], "mu", lineno), "mu",
                                       lineno, opts.clamp, out.clamped);
        const double omega = accept_value(parse_double(fields[col_omega], "omega", lineno),
                                          "omega", lineno, opts.clamp, out.clamped);
        const double nu = accept_value(parse_double(fields[col_nu], "nu", lineno), "nu",
                                       lineno, opts.clamp, out.clamped);
        std::optional<std::string> id;
        if (col_id != kMissing) id = accept_id(trim(fields[col_id]), lineno);
        out.records.push_back(Record{std::move(id), Triple(mu, omega, nu)});
    }
    return out;
}

ParseOutcome parse_jsonl(std::istream& in, const ParseOptions& opts) {
    ParseOutcome out;
    std::string line;
    std::size_t lineno = 0;

    while (next_line(in, line, lineno)) {
        if (trim(line).empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
            throw ParseError(lineno, "invalid JSON");
        }
        if (!obj.is_object()) {
            throw ParseError(lineno, "expected a JSON object");
        }
        const auto number_field = [&](const char* name) {
            const auto it = obj.find(name);
            if (it == obj.end()) {
                throw ParseError(lineno, std::string("missing key ") + name);
            }
            if (!it->is_number()) {
                throw ParseError(lineno, std::string("key ") + name + " is not a number");
            }
            return it->get<double>();
        };
        const double mu = accept_value(number_field("mu"), "mu", lineno, opts.clamp, out.clamped);
        const double omega =
            accept_value(number_field("omega"), "omega", lineno, opts.clamp, out.clamped);
        const double nu = accept_value(number_field("nu"), "nu", lineno, opts.clamp, out.clamped);
        std::optional<std::string> id;
        if (const auto it = obj.find("id"); it != obj.end() && !it->is_null()) {
            if (!it->is_string()) {
                throw ParseError(lineno, "key id is not a string");
            }
            id = accept_id(it->get<std::string>(), lineno);
        }
        out.records.push_back(Record{std::move(id), Triple(mu, omega, nu)});
    }
    return out;
}

constexpr std::string_view kCsvHeader =
    "id,mu,omega,nu,tau,pi,kappa,alpha,kind,entropy_c,entropy_r,"
    "t_c,f_c,a_c,u_c,c_c,n_c,s_c,t_r,f_r,a_r,u_r,c_r,n_r,s_r";

std::array<double, 23> row_numbers(const ResultRow& r) {
    const auto c = r.hepta_c.components();
    const auto u = r.hepta_r.components();
    return {r.triple.mu(), r.triple.omega(), r.triple.nu(),
            r.indices.net_truth, r.indices.ignorance, r.indices.contradiction,
            r.indices.ambiguity, r.entropy_c, r.entropy_r,
            c[0], c[1], c[2], c[3], c[4], c[5], c[6],
            u[0], u[1], u[2], u[3], u[4], u[5], u[6]};
}

}  // namespace

ResultRow evaluate_record(const Record& r, Tolerance tol) {
    return ResultRow{
        r.id,
        r.triple,
        derive_indices(r.triple),
        classify(r.triple, tol),
        entropy(r.triple, Variant::Czekanowski).entropy,
        entropy(r.triple, Variant::Ruzicka).entropy,
        decompose(r.triple, Variant::Czekanowski),
        decompose(r.triple, Variant::Ruzicka),
    };
}

ParseOutcome parse_records(std::istream& in, const ParseOptions& opts) {
    return opts.format == Format::Csv ? parse_csv(in, opts) : parse_jsonl(in, opts);
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void emit_results(const std::vector<ResultRow>& rows, Format format, std::ostream& out) {
    if (format == Format::Csv) {
        out << kCsvHeader << '\n';
        for (const ResultRow& r : rows) {
            out << (r.id ? *r.id : "");
            const auto nums = row_numbers(r);
            for (std::size_t i = 0; i < nums.size(); ++i) {
                out << ',' << format_number(nums[i]);
                if (i == 6) out << ',' << kind_name(r.kind);  // kind follows alpha
            }
            out << '\n';
        }
        return;
    }
    for (const ResultRow& r : rows) {
        out << '{';
        if (r.id) out << "\"id\":\"" << json_escape(*r.id) << "\",";
        const auto nums = row_numbers(r);
        static constexpr std::array<std::string_view, 23> keys = {
            "mu", "omega", "nu", "tau", "pi", "kappa", "alpha", "entropy_c", "entropy_r",
            "t_c", "f_c", "a_c", "u_c", "c_c", "n_c", "s_c",
            "t_r", "f_r", "a_r", "u_r", "c_r", "n_r", "s_r"};
        for (std::size_t i = 0; i < nums.size(); ++i) {
            out << '"' << keys[i] << "\":" << format_number(nums[i]) << ',';
        }
        out << "\"kind\":\"" << kind_name(r.kind) << "\"}\n";
    }
}

std::optional<Quantity> parse_quantity(std::string_view name, Variant variant) {
    if (name == "entropy_c") return Quantity::EntropyC;
    if (name == "entropy_r") return Quantity::EntropyR;
    const bool czek = variant == Variant::Czekanowski;
    if (name == "t") return czek ? Quantity::TruthC : Quantity::TruthR;
    if (name == "f") return czek ? Quantity::FalsityC : Quantity::FalsityR;
    if (name == "a") return czek ? Quantity::AmbiguityC : Quantity::AmbiguityR;
    if (name == "u") return czek ? Quantity::IgnoranceC : Quantity::IgnoranceR;
    if (name == "c") return czek ? Quantity::ContradictionC : Quantity::ContradictionR;
    if (name == "n") return czek ? Quantity::NeutralityC : Quantity::NeutralityR;
    if (name == "s") return czek ? Quantity::SaturationC : Quantity::SaturationR;
    return std::nullopt;
}

std::string_view quantity_name(Quantity q) noexcept {
    switch (q) {
        case Quantity::EntropyC: return "entropy_c";
        case Quantity::EntropyR: return "entropy_r";
        case Quantity::TruthC: return "t_c";
        case Quantity::FalsityC: return "f_c";
        case Quantity::AmbiguityC: return "a_c";
        case Quantity::IgnoranceC: return "u_c";
        case Quantity::ContradictionC: return "c_c";
        case Quantity::NeutralityC: return "n_c";
        case Quantity::SaturationC: return "s_c";
        case Quantity::TruthR: return "t_r";
        case Quantity::FalsityR: return "f_r";
        case Quantity::AmbiguityR: return "a_r";
        case Quantity::IgnoranceR: return "u_r";
        case Quantity::ContradictionR: return "c_r";
        case Quantity::NeutralityR: return "n_r";
        case Quantity::SaturationR: return "s_r";
    }
    return "entropy_c";
}

double evaluate_quantity(Quantity q, const Triple& t) {
    switch (q) {
        case Quantity::EntropyC: return entropy(t, Variant::Czekanowski).entropy;
        case Quantity::EntropyR: return entropy(t, Variant::Ruzicka).entropy;
        default: break;
    }
    const bool czek = q >= Quantity::TruthC && q <= Quantity::SaturationC;
    const Hepta h = decompose(t, czek ? Variant::Czekanowski : Variant::Ruzicka);
    const int offset =
        static_cast<int>(q) - static_cast<int>(czek ? Quantity::TruthC : Quantity::TruthR);
    return h.components()[static_cast<std::size_t>(offset)];
}

Grid evaluate_grid(const GridSpec& spec) {
    if (spec.resolution < 2) {
        throw DomainError("resolution must be at least 2", "resolution");
    }
    if (!std::isfinite(spec.omega) || spec.omega < 0.0 || spec.omega > 1.0) {
        throw DomainError("omega out of range [0,1]", "omega");
    }
    const int n = spec.resolution;
    Grid grid{spec, {}};
    grid.values.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int row = 0; row < n; ++row) {
        const double nu = static_cast<double>(row) / static_cast<double>(n - 1);
        for (int col = 0; col < n; ++col) {
            const double mu = static_cast<double>(col) / static_cast<double>(n - 1);
            grid.values.push_back(evaluate_quantity(spec.quantity, Triple(mu, spec.omega, nu)));
        }
    }
    return grid;
}

std::string grid_table_csv(const Grid& grid) {
    const int n = grid.spec.resolution;
    std::string out = "mu,nu,value\n";
    for (int row = 0; row < n; ++row) {
        const double nu = static_cast<double>(row) / static_cast<double>(n - 1);
        for (int col = 0; col < n; ++col) {
            const double mu = static_cast<double>(col) / static_cast<double>(n - 1);
            out += format_number(mu);
            out += ',';
            out += format_number(nu);
            out += ',';
            out += format_number(grid.values[static_cast<std::size_t>(row) *
                                                 static_cast<std::size_t>(n) +
                                             static_cast<std::size_t>(col)]);
            out += '\n';
        }
    }
    return out;
}

std::string grid_ppm(const Grid& grid) {
    const int n = grid.spec.resolution;
    std::string out = "P6\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
    out.reserve(out.size() + grid.values.size() * 3);
    for (const double v : grid.values) {
        const long level = std::lround(std::clamp(v, 0.0, 1.0) * 255.0);
        const char byte = static_cast<char>(static_cast<unsigned char>(level));
        out += byte;
        out += byte;
        out += byte;
    }
    return out;
}

}  // namespace neutro
