#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "spdkern/gram.hpp"

namespace spdkern {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Index-set notation: semicolon-joined clauses.
//   finite:3,5,9        explicit elements
//   ap:1+4n             arithmetic progression
//   box:(0+2n)x(1+3n)   progression box in N^2
//   pairs:(0,1),(2,3)   explicit pairs
//   all / none          shorthands
// ---------------------------------------------------------------------------

std::string format_set(const SpectralSet& s);
SpectralSet parse_set(const std::string& text);

std::string format_product_set(const ProductSpectralSet& s);
ProductSpectralSet parse_product_set(const std::string& text);

// ---------------------------------------------------------------------------
// Points CSV: header row `manifold,<family>,<d>` (products:
// `product,<family1>,<d1>,<family2>,<d2>`), then one point per row with 17
// significant digits; circles store the angle, everything else ambient
// coordinates.
// ---------------------------------------------------------------------------

struct PointsFile {
    bool is_product = false;
    ManifoldDescriptor single = make_manifold(Family::Circle, 2);
    std::optional<ProductManifold> product;
    std::vector<Point> points;
};

std::string points_to_csv(const ManifoldDescriptor& m, const std::vector<Point>& pts);
std::string points_to_csv(const ProductManifold& m, const std::vector<Point>& pts);
PointsFile parse_points_csv(const std::string& text);

// ---------------------------------------------------------------------------
// Kernel spec JSON. parse(serialize(parse(text))) == parse(text).
// ---------------------------------------------------------------------------

struct SpecFile {
    Scheme scheme;
    int truncation = 0;  // 0 = pick default_truncation at run time
    std::string check;   // empty = family default criterion
    std::optional<double> dominance_s;
    double tol_psd = 1e-10;
    double tol_strict = 1e-8;
    int torus_bound = 8;
};

SpecFile parse_spec(const Json& j);
SpecFile parse_spec_text(const std::string& text);
Json spec_to_json(const SpecFile& s);

// ---------------------------------------------------------------------------
// Result serialization
// ---------------------------------------------------------------------------

Json evidence_to_json(const Evidence& e);
Json verdict_to_json(const Verdict& v, Json parameters = Json::object());
Json spectrum_report_to_json(const SpectrumReport& r);
Json dominance_report_to_json(const DominanceReport& r);

// ---------------------------------------------------------------------------
// Command driver
// ---------------------------------------------------------------------------

enum class Command { Check, Gram, Interpolate, Witness, Basis, Oracle };

struct RunConfig {
    Command command = Command::Check;
    std::string spec_path;
    std::string points_path;  // mutually exclusive with sample
    std::string sample;       // "uniform:30" | "equispaced:16" | "fibonacci:64" | "antipodal:8"
    int truncation = 0;       // 0 = spec / default
    double tol_psd = 0.0;     // 0 = spec value
    double tol_strict = 0.0;  // 0 = spec value
    std::uint64_t seed = 1;
    int torus_bound = 0;  // 0 = spec / default
    std::string output = "json";
    std::string out_path;      // empty = stdout
    std::string data_path;     // interpolate: samples CSV (one re[,im] per row)
    double lambda = 0.0;       // interpolate regularization
    int max_level = 10;        // basis table depth
    std::string fixtures_dir = "fixtures";
};

// Criterion selected by the spec's `check` key (or the family default):
// pd | spd | dominance | dominance_with_s | corollary | recursion.
Verdict run_check(const SpecFile& spec, int truncation, int torus_bound);

// Exit codes: 0 Proven / strict, 1 error, 2 Disproven / not PD, 3 Unknown /
// singular band.
int exit_code_for(Status s);

int run_command(const RunConfig& c, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace spdkern
