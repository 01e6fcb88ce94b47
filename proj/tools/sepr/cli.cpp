#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include "sepr/sepr.hpp"

namespace sepr::cli {
namespace {

struct Options {
  std::string matrix_path;
  std::string subset;
  std::string assign_path;
  bool all_ones = false;
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultBudget;
  std::string format = "text";
  std::optional<std::size_t> order;
  std::string output_path;
};

class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RationalPoint load_assignment(const std::string& path, const VariableTable& vars) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot open assignment file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw BadInput(std::string("malformed assignment file: ") + e.what());
  }
  if (!doc.is_object()) throw BadInput("assignment file must be a JSON object");
  RationalPoint point;
  for (const auto& [name, value] : doc.items()) {
    auto index = vars.find(name);
    if (!index) throw BadInput("assignment names unknown variable '" + name + "'");
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_number_integer()) {
      text = value.dump();
    } else {
      throw BadInput("value of '" + name + "' must be an integer or \"p/q\" string");
    }
    point.set(*index, parse_rational(text));
  }
  return point;
}

std::string witness_text(const RationalPoint& point, const VariableTable& vars) {
  return "[" + point.to_string(vars) + "]";
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const SymMatrix m = opt.matrix_path.empty() ? paper_matrix() : load_matrix_file(opt.matrix_path);
  const auto report = verify_claims(m, opt.budget, opt.seed);
  if (opt.format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << render_text(report);
  }
  return report.exit_code();
}

int cmd_det(const Options& opt, std::ostream& out) {
  const SymMatrix m = load_matrix_file(opt.matrix_path);
  const IndexSet subset = opt.subset.empty() ? IndexSet::full(m.size()) : IndexSet::parse(opt.subset, m.size());
  out << determinant(principal_submatrix(m, subset)).to_string() << '\n';
  return kExitOk;
}

int cmd_sepr(const Options& opt, std::ostream& out) {
  const SymMatrix m = load_matrix_file(opt.matrix_path);
  static const VariableTable kEmpty;
  const VariableTable& vars = m.vars() ? *m.vars() : kEmpty;
  const RationalPoint point = opt.all_ones ? RationalPoint::all_ones(vars) : load_assignment(opt.assign_path, vars);
  out << to_string(sepr_at_point(m, point)) << '\n';
  return kExitOk;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const SymMatrix m = load_matrix_file(opt.matrix_path);
  if (opt.order && (*opt.order < 1 || *opt.order > m.size()))
    throw BadInput("--k must lie in [1, " + std::to_string(m.size()) + "]");
  const MinorTable minors = all_principal_minors(m);

  std::vector<SubsetMask> masks;
  if (opt.order) {
    masks = minors.masks_of_order(*opt.order);
  } else {
    for (SubsetMask mask = 1; mask <= minors.size(); ++mask) masks.push_back(mask);
  }
  for (auto mask : masks) {
    const auto cls = classify_polynomial(minors.at(mask), opt.budget, opt.seed);
    out << IndexSet::from_mask(mask, m.size()).to_string() << ' ' << to_string(cls.kind);
    if (cls.positive_witness) out << " +" << witness_text(*cls.positive_witness, *m.vars());
    if (cls.negative_witness) out << " -" << witness_text(*cls.negative_witness, *m.vars());
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact principal-minor sign analysis (sepr-sequences) for parametric matrices"};
  app.name("sepr");
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", opt.output_path, "Write the result to FILE instead of stdout");
  };
  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "Seed of the witness sampler")->capture_default_str();
    cmd->add_option("--budget", opt.budget, "Samples per polynomial per sign")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  };

  auto* verify = app.add_subcommand("verify-paper", "Verify the counterexample claims (built-in matrix unless --matrix)");
  add_sampling(verify);
  verify->add_option("--format", opt.format, "Output format")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--matrix", opt.matrix_path, "Check the claims against this matrix file instead")
      ->check(CLI::ExistingFile);
  add_output(verify);

  auto* det = app.add_subcommand("det", "Print one principal minor as a polynomial");
  det->add_option("--matrix", opt.matrix_path, "Matrix JSON file")->required()->check(CLI::ExistingFile);
  det->add_option("--subset", opt.subset, "Comma-separated 1-based indices (default: all)");
  add_output(det);

  auto* sepr = app.add_subcommand("sepr", "Print the sepr-sequence at one positive point");
  sepr->add_option("--matrix", opt.matrix_path, "Matrix JSON file")->required()->check(CLI::ExistingFile);
  auto* assign = sepr->add_option("--assign", opt.assign_path, "JSON object: variable -> \"p/q\"")->check(CLI::ExistingFile);
  auto* ones = sepr->add_flag("--all-ones", opt.all_ones, "Set every variable to 1");
  assign->excludes(ones);
  ones->excludes(assign);
  add_output(sepr);

  auto* classify = app.add_subcommand("classify", "Classify every principal minor over the positive orthant");
  classify->add_option("--matrix", opt.matrix_path, "Matrix JSON file")->required()->check(CLI::ExistingFile);
  classify->add_option("--k", opt.order, "Only minors of this order");
  add_sampling(classify);
  add_output(classify);

  try {
    app.parse(argc, argv);
    if (sepr->parsed() && !opt.all_ones && opt.assign_path.empty())
      throw CLI::ValidationError("sepr: exactly one of --assign or --all-ones is required");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (verify->parsed()) code = cmd_verify(opt, buffer);
    else if (det->parsed()) code = cmd_det(opt, buffer);
    else if (sepr->parsed()) code = cmd_sepr(opt, buffer);
    else code = cmd_classify(opt, buffer);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  if (opt.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opt.output_path, std::ios::binary);
    if (!(file << buffer.str())) {
      err << "error: cannot write '" << opt.output_path << "'\n";
      return kExitBadInput;
    }
  }
  return code;
}

}  // namespace sepr::cli
