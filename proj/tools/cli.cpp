#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "prodbasis/construct.hpp"
#include "prodbasis/errors.hpp"
#include "prodbasis/gpt.hpp"
#include "prodbasis/linalg.hpp"
#include "prodbasis/text_io.hpp"
#include "prodbasis/verify.hpp"

namespace prodbasis::cli {

namespace {

struct Flags {
  std::string shape;
  std::string field;  // empty means Q
  std::uint64_t seed = 0;
  std::string covector;
  std::optional<std::size_t> random_codim;
  std::uint64_t budget = kDefaultEnumerationBudget;
  bool force = false;
  std::string out;
  std::string subspace_path;
  std::string candidate_path;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

// Writes to a sibling temp file and renames, so a failed run never leaves a partial file.
void emit(const Flags& flags, const std::string& text, std::ostream& out) {
  if (flags.out.empty() || flags.out == "-") {
    out << text;
    return;
  }
  const std::filesystem::path target(flags.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    file << text;
    file.flush();
    if (!file) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

FieldSpec field_of(const Flags& flags) { return FieldSpec::parse(flags.field.empty() ? "Q" : flags.field); }

TensorShape require_shape(const Flags& flags) {
  if (flags.shape.empty()) throw std::invalid_argument("--shape is required");
  return TensorShape::parse(flags.shape);
}

// r covectors with small random entries, redrawn until independent.
std::vector<TensorVector> random_covectors(const TensorShape& shape, const FieldSpec& f, std::size_t r,
                                           std::uint64_t seed) {
  if (r < 1 || r > shape.total()) throw std::out_of_range("--random-codim out of range");
  Rng rng(seed);
  EchelonBasis span(f, shape.total());
  std::vector<TensorVector> out;
  while (out.size() < r) {
    Vec coords;
    for (std::size_t i = 0; i < shape.total(); ++i) coords.push_back(sample(f, rng, 3));
    if (span.insert(coords)) out.emplace_back(shape, f, std::move(coords));
  }
  return out;
}

int cmd_construct(const Flags& flags, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<TensorVector> covectors;
  if (!flags.covector.empty()) {
    if (flags.random_codim) throw std::invalid_argument("--covector and --random-codim are exclusive");
    covectors = text::parse_vector_list(read_input(flags.covector, in));
    if (covectors.empty()) throw ParseError("covector file is empty");
  } else {
    const std::size_t r = flags.random_codim.value_or(1);
    if (r == 0) throw std::invalid_argument("--random-codim must be at least 1");
    covectors = random_covectors(require_shape(flags), field_of(flags), r, flags.seed);
  }
  const TensorShape shape = covectors.front().shape();
  const FieldSpec f = covectors.front().field();
  if (!flags.shape.empty() && !(TensorShape::parse(flags.shape) == shape)) {
    throw std::invalid_argument("--shape does not match the covector file");
  }
  if (!flags.field.empty() && !(field_of(flags) == f)) {
    throw std::invalid_argument("--field does not match the covector file");
  }
  const Subspace L = Subspace::from_cogenerators(shape, f, covectors);

  ConstructOptions opts;
  opts.seed = flags.seed;
  opts.force = flags.force;
  opts.enumeration_budget = flags.budget;
  const ProductTuple tuple = L.codim() == 1 ? product_basis_codim1(L, opts) : product_tuple(L, opts);
  const auto embedded = tuple.embedded();
  // codim 1 must give a full basis; codim r gives total - r^n vectors
  std::size_t expected = L.dim();
  if (L.codim() > 1) {
    std::size_t power = 1;
    for (std::size_t j = 0; j < shape.parties(); ++j) power *= L.codim();
    expected = shape.total() - power;
  }
  const VerificationReport report = verify_product_family(embedded, L, expected);

  std::ostringstream text;
  text << "# product vectors in a codimension-" << L.codim() << " subspace of " << shape.to_string()
       << " over " << f.to_string() << ", seed " << flags.seed << '\n';
  for (const TensorVector& w : covectors) text << "# cogen " << text::format_vector(w) << '\n';
  text << text::format_product_tuple(tuple);
  emit(flags, text.str(), out);

  err << "verify: " << (report.ok ? "ok" : "FAILED") << ", " << report.rank_found
      << " independent product vectors, expected " << report.expected << ", dim " << L.dim() << '\n';
  return report.ok ? kOk : kFalse;
}

int cmd_witness(const Flags& flags, std::ostream& out) {
  const Subspace L = witness_no_product_basis(require_shape(flags), field_of(flags));
  emit(flags, text::format_subspace(L), out);
  return kOk;
}

int cmd_verify(const Flags& flags, std::istream& in, std::ostream& out) {
  if (flags.subspace_path == "-" && flags.candidate_path == "-") {
    throw std::invalid_argument("only one input can come from stdin");
  }
  const Subspace L = text::parse_subspace(read_input(flags.subspace_path, in));
  const auto candidates = text::parse_vector_list(read_input(flags.candidate_path, in));
  const VerificationReport report = verify_product_basis(candidates, L);

  std::ostringstream text;
  text << "result: " << (report.ok ? "PRODUCT_BASIS" : "NOT_A_PRODUCT_BASIS") << '\n';
  text << "rank: " << report.rank_found << " of " << report.expected << '\n';
  for (const VerificationFailure& fail : report.failures) {
    text << "failure: " << fail.index << " " << to_string(fail.reason) << '\n';
  }
  emit(flags, text.str(), out);
  return report.ok ? kOk : kFalse;
}

int cmd_enumerate(const Flags& flags, std::istream& in, std::ostream& out) {
  const Subspace L = text::parse_subspace(read_input(flags.subspace_path, in));
  const BruteForceResult result = has_product_basis_bruteforce(L, flags.budget);

  std::ostringstream text;
  text << "verdict: " << (result.has_product_basis ? "PRODUCT_BASIS" : "NO_PRODUCT_BASIS") << '\n';
  text << "dim: " << result.dim << '\n';
  text << "product-span rank: " << result.product_span_rank << '\n';
  text << "product vectors: " << result.product_count << '\n';
  for (const ProductVector& pv : result.basis) {
    text << "# factors: " << text::format_factors(pv.factors) << '\n';
    text << text::format_vector(pv.embedded) << '\n';
  }
  emit(flags, text.str(), out);
  return kOk;
}

int cmd_sweep(const Flags& flags, std::ostream& out) {
  SweepOptions opts;
  opts.seed = flags.seed;
  opts.budget = flags.budget;
  const SweepReport report = sweep_codim1(require_shape(flags), field_of(flags), opts);
  emit(flags, format_sweep_report(report), out);
  return report.discrepancies == 0 ? kOk : kFalse;
}

int cmd_gpt_demo(const Flags& flags, std::ostream& out) {
  const TensorShape shape = flags.shape.empty() ? TensorShape({2, 2}) : require_shape(flags);
  const ProjectionCounterexample ce = build_projection_counterexample(shape);
  const Inertia& pi = ce.projection_pt_inertia;

  std::ostringstream text;
  text << "# subspace with a product basis whose projection fails the partial-transpose test\n";
  for (const ProductVector& pv : ce.basis) {
    text << "basis: " << text::format_factors(pv.factors) << '\n';
  }
  text << "block:\n" << text::format_sym_matrix(ce.block);
  text << "projection partial transpose inertia: (" << pi.positive << "," << pi.negative << ","
       << pi.zero << ")\n";
  text << format_certificate(ce.certificate) << '\n';
  emit(flags, text.str(), out);
  return ce.certificate.verdict == SeparabilityVerdict::not_separable ? kOk : kFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact product-basis constructions over prime fields and the rationals", "prodbasis"};
  app.require_subcommand(1);
  Flags flags;

  auto add_shape = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--shape", flags.shape, "Party dimensions, e.g. 2x2x3");
    if (required) opt->required();
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", flags.field, "Q (default) or GFp");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", flags.out, "Output file (default stdout)"); };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", flags.budget, "Cap on exhaustive enumeration")->capture_default_str();
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", flags.seed, "RNG seed")->capture_default_str(); };

  auto* construct = app.add_subcommand("construct", "Product vectors inside a subspace given by covectors");
  add_shape(construct, false);
  add_field(construct);
  add_seed(construct);
  construct->add_option("--covector", flags.covector, "File of covectors (one vector per line, '-' for stdin)");
  construct->add_option("--random-codim", flags.random_codim, "Use r random covectors instead");
  add_budget(construct);
  construct->add_flag("--force", flags.force, "Run outside the guaranteed field-size regime");
  add_out(construct);

  auto* witness = app.add_subcommand("witness", "Subspace of codimension 2 without a product basis");
  add_shape(witness, true);
  add_field(witness);
  add_out(witness);

  auto* verify = app.add_subcommand("verify", "Check a candidate product basis of a subspace");
  verify->add_option("subspace", flags.subspace_path, "Subspace file ('-' for stdin)")->required();
  verify->add_option("candidates", flags.candidate_path, "Candidate vector file ('-' for stdin)")->required();
  add_out(verify);

  auto* enumerate = app.add_subcommand("enumerate", "Decide by enumeration whether a subspace has a product basis");
  enumerate->add_option("subspace", flags.subspace_path, "Subspace file (default stdin)");
  add_budget(enumerate);
  add_out(enumerate);

  auto* sweep = app.add_subcommand("sweep", "Construction versus enumeration on every codimension-1 subspace");
  add_shape(sweep, true);
  add_field(sweep);
  add_seed(sweep);
  add_budget(sweep);
  add_out(sweep);

  auto* gpt = app.add_subcommand("gpt-demo", "Partial-transpose certificate for a product-basis projection");
  add_shape(gpt, false);
  add_out(gpt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }

  try {
    if (construct->parsed()) return cmd_construct(flags, in, out, err);
    if (witness->parsed()) return cmd_witness(flags, out);
    if (verify->parsed()) return cmd_verify(flags, in, out);
    if (enumerate->parsed()) return cmd_enumerate(flags, in, out);
    if (sweep->parsed()) return cmd_sweep(flags, out);
    if (gpt->parsed()) return cmd_gpt_demo(flags, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  } catch (const CompletionNotFound& e) {
    err << e.what() << '\n';
    return kCompletionFailed;
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::logic_error& e) {
    // FieldTooSmall, NotEnumerable, out-of-range r, mismatched inputs
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace prodbasis::cli
