/*
 * Copyright 2026 The rampqss developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

// rampqss: build / encode / decode / classify / verify / petz-demo for
// (k,L,n)-threshold ramp quantum secret sharing schemes.
//
// Exit codes: 0 success, 1 property or classification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "rqss/access.hpp"
#include "rqss/errors.hpp"
#include "rqss/info.hpp"
#include "rqss/io.hpp"
#include "rqss/recover.hpp"
#include "rqss/scheme.hpp"
#include "rqss/verify.hpp"

namespace {

using namespace rqss;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string scheme_file;
  std::string state_file;
  std::string reference_file;
  std::string subset_text;
  std::string log_base = "q";
  std::string out_path;
  std::uint64_t seed = 1;
  // build-only scheme parameters
  std::uint64_t q = 0, k = 0, L = 0;
  std::vector<std::uint64_t> points;
};

// Writes to --out when given, standard output otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw io::FormatError("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

qss::Scheme load(const Options& opt) {
  return qss::Scheme(io::load_scheme(opt.scheme_file));
}

int cmd_build(const Options& opt) {
  qss::SchemeParams params;
  if (!opt.scheme_file.empty()) {
    params = io::load_scheme(opt.scheme_file);
  } else {
    params = qss::SchemeParams::make(opt.q, opt.k, opt.L);
    if (!opt.points.empty()) {
      params.eval_points.clear();
      for (std::uint64_t x : opt.points) params.eval_points.emplace_back(x, params.q);
    }
  }
  const qss::Scheme scheme(params);
  if (!opt.out_path.empty()) io::save_scheme(scheme.params(), opt.out_path);
  std::cout << "scheme q=" << params.q << " k=" << params.k << " L=" << params.L
            << " n=" << params.n << " secret_dim=" << scheme.secret_dim()
            << " support_size=" << scheme.normalization() << "\n";
  return kExitOk;
}

int cmd_encode(const Options& opt) {
  const qss::Scheme scheme = load(opt);
  qlin::PureState psi = io::load_secret_state(opt.state_file, scheme);
  const double norm_err = std::abs(psi.amp.norm() - 1.0);
  if (norm_err > 1e-9) {
    std::cerr << "error: input state norm deviates by " << norm_err << "\n";
    return kExitInput;
  }
  const auto amps = scheme.encode_sparse(psi);
  if (!opt.out_path.empty()) io::save_encoded_state(amps, opt.out_path);
  std::cout << "encoded support_size=" << amps.size() << "\n";
  return kExitOk;
}

int cmd_decode(const Options& opt) {
  const qss::Scheme scheme = load(opt);
  const std::vector<int> subset = io::parse_subset(opt.subset_text, scheme.params().n);
  const access::AccessClass cls = access::classify(scheme, subset);
  if (cls != access::AccessClass::kQualified) {
    std::cerr << "error: subset is " << access::to_string(cls) << "\n";
    return kExitFailure;
  }
  const auto amps = io::load_encoded_state(opt.state_file, scheme);

  // Reduce the sparse global state to the decoding sub-subset of size k.
  const std::vector<int> sub(subset.begin(), subset.begin() + scheme.params().k);
  const std::vector<int> comp = scheme.complement(sub);
  std::map<std::uint64_t, std::map<std::uint64_t, qlin::Complex>> groups;  // rest -> keep
  std::vector<qlin::Index> digits;
  const std::uint64_t n = scheme.params().n;
  const std::vector<qlin::Index> dims(n, static_cast<qlin::Index>(scheme.params().q));
  std::uint64_t sub_dim = 1;
  for (std::size_t i = 0; i < sub.size(); ++i) sub_dim *= scheme.params().q;
  for (const auto& [idx, amp] : amps) {
    const std::vector<qlin::Index> dg = qlin::unpack_index(static_cast<qlin::Index>(idx), dims);
    std::uint64_t keep = 0, rest = 0;
    for (int i : sub) keep = keep * scheme.params().q + static_cast<std::uint64_t>(dg[i]);
    for (int i : comp) rest = rest * scheme.params().q + static_cast<std::uint64_t>(dg[i]);
    groups[rest][keep] += amp;
  }
  qlin::Matrix rho = qlin::Matrix::Zero(sub_dim, sub_dim);
  for (const auto& [rest, col] : groups) {
    for (const auto& [ki, ai] : col) {
      for (const auto& [kj, aj] : col) rho(ki, kj) += ai * std::conj(aj);
    }
  }
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-9) {
    std::cerr << "error: encoded state norm deviates by " << std::abs(tr - 1.0) << "\n";
    return kExitInput;
  }
  const qlin::DensityMatrix rho_sub{
      rho, std::vector<qlin::Index>(scheme.params().k, static_cast<qlin::Index>(scheme.params().q))};
  const recover::PermutationDecoder dec = recover::build_decoder(scheme, sub);
  const qlin::DensityMatrix recovered = dec.decode(rho_sub);
  if (!opt.out_path.empty()) io::save_density(recovered, opt.out_path);
  std::cout << "decoded subset=" << io::format_subset(subset) << "\n";
  if (!opt.reference_file.empty()) {
    const qlin::PureState ref = io::load_secret_state(opt.reference_file, scheme);
    std::cout << "fidelity=" << io::format_real(qlin::fidelity_pure(ref, recovered)) << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& opt) {
  const qss::Scheme scheme = load(opt);
  const auto reports = access::access_structure(scheme);
  Sink sink(opt.out_path);
  io::write_access_report(sink.os(), scheme, reports, opt.log_base);

  // Structural exit status: Definition-1 pattern, monotonicity, duality.
  const auto& p = scheme.params();
  const std::uint64_t full = (std::uint64_t{1} << p.n) - 1;
  std::vector<int> cls(full + 1, 0);
  bool ok = true;
  for (const auto& r : reports) {
    cls[access::subset_to_mask(r.subset)] = static_cast<int>(r.cls);
    const std::size_t size = r.subset.size();
    const int expected = size <= p.k - p.L ? 0 : (size >= p.k ? 2 : 1);
    if (static_cast<int>(r.cls) != expected) {
      std::cerr << "failure: subset " << io::format_subset(r.subset) << " classified "
                << access::to_string(r.cls) << ", threshold pattern expects " << expected << "\n";
      ok = false;
    }
  }
  for (std::uint64_t x = 0; x <= full && ok; ++x) {
    for (std::uint64_t y = x;; y = (y + 1) | x) {
      if (cls[y] < cls[x]) {
        std::cerr << "failure: monotonicity violated at masks " << x << " vs " << y << "\n";
        ok = false;
      }
      if (y == full) break;
    }
    if ((cls[x] == 2) != (cls[full & ~x] == 0)) {
      std::cerr << "failure: duality violated at mask " << x << "\n";
      ok = false;
    }
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_verify(const Options& opt) {
  const qss::Scheme scheme = load(opt);
  verify::VerifyOptions vopts;
  vopts.seed = opt.seed;
  const auto results = verify::run_checks(scheme, vopts);
  Sink sink(opt.out_path);
  io::write_verify_report(sink.os(), results);
  return verify::all_pass(results) ? kExitOk : kExitFailure;
}

int cmd_petz_demo(const Options& opt) {
  const qss::Scheme scheme = load(opt);
  const std::vector<int> subset = io::parse_subset(opt.subset_text, scheme.params().n);
  const access::AccessClass cls = access::classify(scheme, subset);
  const recover::KrausChannel channel = recover::share_channel(scheme, subset);
  const std::uint64_t d = scheme.secret_dim();
  const std::vector<qlin::Index> sdims(scheme.params().L,
                                       static_cast<qlin::Index>(scheme.params().q));
  const qlin::DensityMatrix sigma{qlin::Matrix::Identity(d, d) / static_cast<double>(d), sdims};
  const recover::PetzMap petz(channel, sigma);

  rng::SplitMix gen(opt.seed);
  double worst = 0;
  for (int t = 0; t < 5; ++t) {
    const qlin::PureState psi = qlin::random_pure_state(sdims, gen);
    const qlin::Matrix rho = psi.amp * psi.amp.adjoint();
    worst = std::max(worst, qlin::trace_distance(petz.apply(channel.apply(rho)), rho));
  }
  std::cout << "subset=" << io::format_subset(subset) << " class=" << access::to_string(cls)
            << " petz_recovery_error=" << io::format_real(worst) << "\n";
  if (cls == access::AccessClass::kQualified && worst > 1e-8) {
    std::cerr << "failure: qualified subset not recovered by the canonical reverse\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(k,L,n)-threshold ramp quantum secret sharing toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool need_scheme) {
    auto* s = sub->add_option("--scheme", opt.scheme_file, "scheme JSON file");
    if (need_scheme) s->required();
    sub->add_option("--out", opt.out_path, "output path (default: stdout)");
    sub->add_option("--seed", opt.seed, "seed for randomized checks");
    sub->add_option("--log-base", opt.log_base, "entropy unit: 2, e or q")
        ->check(CLI::IsMember({"2", "e", "q"}));
  };

  auto* build = app.add_subcommand("build", "validate a scheme and report its structure");
  add_common(build, false);
  build->add_option("--q", opt.q, "field size (prime)");
  build->add_option("--k", opt.k, "threshold");
  build->add_option("--L", opt.L, "ramp width");
  build->add_option("--points", opt.points, "evaluation points (default 0..n-1)");

  auto* encode = app.add_subcommand("encode", "encode a secret state");
  add_common(encode, true);
  encode->add_option("--state", opt.state_file, "secret state file")->required();

  auto* decode = app.add_subcommand("decode", "decode from a qualified subset");
  add_common(decode, true);
  decode->add_option("--state", opt.state_file, "encoded state file")->required();
  decode->add_option("--subset", opt.subset_text, "1-based share indices, e.g. 1,2,3")->required();
  decode->add_option("--reference", opt.reference_file, "secret state to compare against");

  auto* classify = app.add_subcommand("classify", "classify every nonempty share subset");
  add_common(classify, true);

  auto* verify_cmd = app.add_subcommand("verify", "run all property checks");
  add_common(verify_cmd, true);

  auto* petz = app.add_subcommand("petz-demo", "canonical reverse operation on one subset");
  add_common(petz, true);
  petz->add_option("--subset", opt.subset_text, "1-based share indices")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 exits 0 for --help; anything else is an input error.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (build->parsed()) return cmd_build(opt);
    if (encode->parsed()) return cmd_encode(opt);
    if (decode->parsed()) return cmd_decode(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (verify_cmd->parsed()) return cmd_verify(opt);
    if (petz->parsed()) return cmd_petz_demo(opt);
  } catch (const rqss::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const rqss::io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInput;
}
