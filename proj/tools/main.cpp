#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qstar/classify.hpp"
#include "qstar/fractal.hpp"
#include "qstar/levelset.hpp"
#include "qstar/repsys.hpp"
#include "qstar/spec_io.hpp"
#include "qstar/verify.hpp"

namespace {

using namespace qstar;

FunctionSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_file(buf.str());
}

std::string show(const Rational& r, std::size_t digits = 15) {
  if (r.is_integer()) return r.str();
  return r.str() + " = " + r.decimal(digits);
}

const char* tag_name(RegimeTag t) {
  switch (t) {
    case RegimeTag::StrictlyIncreasing: return "StrictlyIncreasing";
    case RegimeTag::CantorSingular: return "CantorSingular";
    case RegimeTag::NowhereMonotone: return "NowhereMonotone";
    default: return "Mixed";
  }
}

char sign_char(Sign s) {
  return s == Sign::Positive ? '+' : s == Sign::Negative ? '-' : '0';
}

const char* witness_name(Witness w) {
  switch (w) {
    case Witness::SignChange: return "SignChange";
    case Witness::EndpointHit: return "EndpointHit";
    default: return "RangeOnly";
  }
}

const char* endpoint_name(EndpointTag t) {
  return t == EndpointTag::Left ? "left" : "right";
}

void run_classify(const FunctionSpec& spec) {
  const Regime regime = classify_regime(spec.eps);
  std::cout << "regime: " << tag_name(regime.tag) << "\n";
  const std::size_t npre = spec.eps.preamble().size();
  std::string pre, per;
  for (std::size_t i = 0; i < regime.per_index.size(); ++i) {
    (i < npre ? pre : per) += sign_char(regime.per_index[i]);
  }
  if (!pre.empty()) std::cout << "g1 signs, preamble: " << pre << "\n";
  std::cout << "g1 signs, period: " << per << "\n";
}

void run_eval(const FunctionSpec& spec, const std::string& x_text, double tol) {
  const Rational x(x_text);
  const EncodeResult enc = encode(spec.x_schedule, x, 512);
  if (enc.exact) {
    std::cout << "f(" << x << ") = " << show(eval_exact(spec, *enc.full)) << "\n";
  } else {
    std::cout << "f(" << x << ") = " << eval_approx(spec, x.to_double(), tol)
              << " (within " << tol << ")\n";
  }
}

void run_encode(const FunctionSpec& spec, const std::string& x_text, std::size_t depth) {
  const EncodeResult enc = encode(spec.x_schedule, Rational(x_text), depth);
  std::cout << "word: " << enc.word.str() << "\n";
  std::cout << "exact: " << (enc.exact ? "yes" : "no") << "\n";
  if (enc.full) std::cout << "expansion: " << enc.full->str() << "\n";
}

void run_increment(const FunctionSpec& spec, const std::string& word) {
  std::cout << "mu = " << show(increment(spec, DigitWord::parse(word))) << "\n";
}

void run_range(const FunctionSpec& spec, const std::string& word) {
  const DigitWord w = DigitWord::parse(word);
  const CylinderRange r = range_on_cylinder(spec, w);
  std::cout << "f(cylinder " << (w.empty() ? "(root)" : w.str()) << ") = [" << r.lo << ", "
            << r.hi << "]\n";
  std::cout << "min at " << endpoint_name(r.argmin_at) << " endpoint, max at "
            << endpoint_name(r.argmax_at) << " endpoint\n";
}

void run_levelset(const FunctionSpec& spec, const std::string& y_text, std::size_t depth) {
  const Rational y0(y_text);
  const auto regions = preimage_regions(spec, y0, depth);
  std::cout << "regions: " << regions.size() << "\n";
  for (const SolutionRegion& r : regions) {
    std::cout << "  word=" << r.word.str() << " x=[" << r.x_left << ", " << r.x_right
              << "] f=[" << r.f_lo << ", " << r.f_hi << "] " << witness_name(r.witness)
              << "\n";
  }
  std::cout << "root count lower bound: " << root_count_lower_bound(spec, y0, depth) << "\n";
}

void run_graph(const FunctionSpec& spec, std::size_t rank, const std::string& out,
               std::size_t digits, bool exact) {
  const GraphSample sample = graph_sample(spec, rank);
  std::ofstream csv(out);
  if (!csv) throw std::runtime_error("cannot open output file: " + out);
  csv << "x,y\n";
  for (const auto& [x, y] : sample.points) {
    if (exact) {
      csv << x << "," << y << "\n";
    } else {
      csv << x.decimal(digits) << "," << y.decimal(digits) << "\n";
    }
  }
  std::cout << "wrote " << sample.points.size() << " points to " << out << "\n";
}

void run_ifs(const FunctionSpec& spec) {
  const auto maps = ifs_maps(spec);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::cout << "phi_" << i << ": x' = " << maps[i].qx << "*x + " << maps[i].bx
              << ", y' = " << maps[i].gy << "*y + " << maps[i].dy << "\n";
  }
}

void run_dimension(const FunctionSpec& spec, const std::vector<std::size_t>& scales) {
  const BoxDimension dim = box_dimension(spec, scales);
  for (const auto& [n, cells] : dim.per_scale) {
    std::cout << "n=" << n << " cells=" << cells << "\n";
  }
  std::cout << "estimate: " << dim.estimate << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q*3 digit systems and their nowhere-monotone function family, exactly"};
  app.require_subcommand(1);
  std::string spec_path;
  app.add_option("--spec", spec_path, "JSON function spec file")->required();

  std::string x_text, y_text, word, out_path;
  double tol = 1e-12;
  std::size_t depth = 32, level_depth = 8, rank = 6, digits = 15, verify_rank = 6;
  bool exact_csv = false;
  std::vector<std::size_t> scales{27, 81, 243};

  auto* c_classify = app.add_subcommand("classify", "monotonicity regime of the spec");
  auto* c_eval = app.add_subcommand("eval", "evaluate f at a point");
  c_eval->add_option("--x", x_text, "point in [0,1], rational or decimal")->required();
  c_eval->add_option("--tol", tol, "tolerance for the approximate fallback");
  auto* c_encode = app.add_subcommand("encode", "digit expansion of a point");
  c_encode->add_option("--x", x_text, "point in [0,1]")->required();
  c_encode->add_option("--depth", depth, "maximum digits to extract");
  auto* c_incr = app.add_subcommand("increment", "exact f-increment of a cylinder");
  c_incr->add_option("--word", word, "cylinder address over {0,1,2}")->required();
  auto* c_range = app.add_subcommand("range", "exact image of a cylinder");
  c_range->add_option("--word", word, "cylinder address over {0,1,2}")->required();
  auto* c_level = app.add_subcommand("levelset", "certified preimage regions of a level");
  c_level->add_option("--y", y_text, "target value y0")->required();
  c_level->add_option("--depth", level_depth, "refinement depth");
  auto* c_graph = app.add_subcommand("graph", "sample the graph to CSV");
  c_graph->add_option("--rank", rank, "cylinder rank (3^rank + 1 points)");
  c_graph->add_option("--out", out_path, "CSV output path")->required();
  c_graph->add_option("--digits", digits, "decimal digits in CSV");
  c_graph->add_flag("--exact", exact_csv, "write exact rationals instead of decimals");
  auto* c_ifs = app.add_subcommand("ifs", "the three affine maps of the graph");
  auto* c_dim = app.add_subcommand("dimension", "box-counting dimension estimate");
  c_dim->add_option("--scales", scales, "grid sizes")->delimiter(',');
  auto* c_verify = app.add_subcommand("verify", "run the invariant suite");
  c_verify->add_option("--rank", verify_rank, "word length budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    const FunctionSpec spec = load_spec(spec_path);
    if (*c_classify) run_classify(spec);
    if (*c_eval) run_eval(spec, x_text, tol);
    if (*c_encode) run_encode(spec, x_text, depth);
    if (*c_incr) run_increment(spec, word);
    if (*c_range) run_range(spec, word);
    if (*c_level) run_levelset(spec, y_text, level_depth);
    if (*c_graph) run_graph(spec, rank, out_path, digits, exact_csv);
    if (*c_ifs) run_ifs(spec);
    if (*c_dim) run_dimension(spec, scales);
    if (*c_verify) {
      if (!run_verification(spec, {verify_rank}, std::cout)) {
        std::cout << "verification FAILED\n";
        return 1;
      }
      std::cout << "verification passed\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
