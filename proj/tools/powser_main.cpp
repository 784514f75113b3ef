#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "powser/extension.hpp"
#include "powser/literals.hpp"
#include "powser/psi_map.hpp"
#include "powser/seminorms.hpp"
#include "powser/verify.hpp"
#include "powser/witness.hpp"

using namespace powser;

namespace {

// Relative --out paths land under POWSER_OUTPUT_DIR when it is set.
std::string resolve_out_path(const std::string& out) {
  const char* dir = std::getenv("POWSER_OUTPUT_DIR");
  if (dir != nullptr && *dir != '\0' && !out.empty() && out.front() != '/') {
    return std::string(dir) + "/" + out;
  }
  return out;
}

void emit(const std::string& payload, const std::string& out) {
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  const std::string path = resolve_out_path(out);
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  f << payload;
}

ExecMode parse_mode(const std::string& text) {
  if (text == "serial") return ExecMode::Serial;
  if (text == "parallel") return ExecMode::Parallel;
  throw std::invalid_argument("mode must be 'serial' or 'parallel', got '" +
                              text + "'");
}

struct CommonOut {
  std::string format = "text";
  std::string out;
};

void add_output_options(CLI::App* cmd, CommonOut& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out,
                  "write to this file instead of stdout (relative paths "
                  "resolve under POWSER_OUTPUT_DIR)");
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string config_path;
  std::string max_index, max_degree, i_values, seed, samples, psi_samples;
  std::string seq_limit, m_limit, k_limit, mode, suites;
  bool corrupt_psi = false;
  bool strict_ctx = false;
  CommonOut out;
};

int run_verify_cmd(const CLI::App* cmd, const VerifyArgs& a) {
  RunConfig cfg;
  if (!a.config_path.empty()) {
    cfg = load_config_file(a.config_path);
  }
  const std::vector<std::pair<std::string, const std::string*>> overrides = {
      {"max_index", &a.max_index},   {"max_degree", &a.max_degree},
      {"i_values", &a.i_values},     {"seed", &a.seed},
      {"samples", &a.samples},       {"psi_samples", &a.psi_samples},
      {"seq_limit", &a.seq_limit},   {"m_limit", &a.m_limit},
      {"k_limit", &a.k_limit},       {"mode", &a.mode},
      {"suites", &a.suites},
  };
  for (const auto& [key, value] : overrides) {
    std::string flag = "--" + key;
    for (char& ch : flag) {
      if (ch == '_') ch = '-';
    }
    if (cmd->count(flag) > 0) {
      set_config_value(cfg, key, *value);
    }
  }
  if (cmd->count("--corrupt-psi") > 0) {
    set_config_value(cfg, "corrupt_psi", a.corrupt_psi ? "true" : "false");
  }
  if (cmd->count("--strict-ctx") > 0) {
    set_config_value(cfg, "strict_ctx", a.strict_ctx ? "true" : "false");
  }

  const VerificationReport rep = run_verify(cfg);
  const std::string payload = a.out.format == "json"
                                  ? report_to_json(rep).dump(2) + "\n"
                                  : report_to_text(rep);
  emit(payload, a.out.out);
  return rep.all_pass() ? 0 : 1;
}

// --------------------------------------------------------------- witness

enum class FamToken { TauC, TauI, TauJ, Q, QPrime, QDel, QDelPrime };

FamToken parse_family_token(const std::string& text) {
  if (text == "tau_c") return FamToken::TauC;
  if (text == "tau_i") return FamToken::TauI;
  if (text == "tau_j") return FamToken::TauJ;
  if (text == "q") return FamToken::Q;
  if (text == "qprime") return FamToken::QPrime;
  if (text == "qdel") return FamToken::QDel;
  if (text == "qdelprime") return FamToken::QDelPrime;
  throw std::invalid_argument(
      "unknown seminorm family '" + text +
      "' (expected tau_c, tau_i, tau_j, q, qprime, qdel or qdelprime)");
}

bool is_comm_family(FamToken t) {
  return t == FamToken::TauC || t == FamToken::TauI || t == FamToken::TauJ;
}

struct WitnessArgs {
  std::string pair;
  Letter i = 1;
  Letter j = 2;
  std::string seq;
  std::uint32_t seq_limit = 6;
  std::uint32_t k_limit = 4;
  std::string mode = "parallel";
  CommonOut out;
};

CommSeries base_null_sequence(Letter i, std::uint32_t n) {
  const Letter top = std::max<Letter>(i, static_cast<Letter>(n));
  const TruncationCtx ctx{top, 1};
  return sub(CommSeries::generator(i, ctx),
             CommSeries::generator(static_cast<Letter>(n), ctx));
}

int run_witness_cmd(const WitnessArgs& a) {
  const std::size_t comma = a.pair.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument(
        "--pair expects two comma-separated family names");
  }
  const FamToken left = parse_family_token(a.pair.substr(0, comma));
  const FamToken right = parse_family_token(a.pair.substr(comma + 1));
  if (is_comm_family(left) != is_comm_family(right)) {
    throw std::invalid_argument(
        "--pair must name two base-algebra families or two extension "
        "families, not a mix");
  }
  const ExecMode mode = parse_mode(a.mode);
  const Letter i = a.i;
  const Letter j = a.j;
  if (i < 1 || j < 1) {
    throw std::invalid_argument("positions --i and --j must be >= 1");
  }

  const bool comm_side = is_comm_family(left);
  const std::string default_seq = comm_side ? "Xn_to_Xi" : "Xn_to_Xi_ext";
  const std::string seq = a.seq.empty() ? default_seq : a.seq;
  const bool named = seq == "Xn_to_Xi" || seq == "Xn_to_Xi_ext" ||
                     seq == "graph_flat";
  if (named && comm_side && seq != "Xn_to_Xi") {
    throw std::invalid_argument("sequence '" + seq +
                                "' lives in the extension; pick extension "
                                "families or the sequence Xn_to_Xi");
  }
  if (named && !comm_side && seq == "Xn_to_Xi") {
    throw std::invalid_argument(
        "sequence 'Xn_to_Xi' lives in the base algebra; use Xn_to_Xi_ext");
  }

  std::vector<std::uint32_t> indices;
  for (std::uint32_t n = 1; n <= a.seq_limit; ++n) {
    if (named && n == i) continue;  // the built-ins vanish at N == i
    indices.push_back(n);
  }

  std::vector<std::uint32_t> ks;
  for (std::uint32_t k = 0; k <= a.k_limit; ++k) ks.push_back(k);

  WitnessTable table;
  if (comm_side) {
    std::vector<std::pair<std::string, std::function<Rational(const CommSeries&)>>>
        rows;
    const auto add_rows = [&](FamToken t) {
      for (const std::uint32_t k : ks) {
        switch (t) {
          case FamToken::TauC:
            rows.emplace_back("p[k=" + std::to_string(k) + "]",
                              [k](const CommSeries& x) { return p_k(x, k); });
            break;
          case FamToken::TauI:
            rows.emplace_back(
                "p'[k=" + std::to_string(k) + ",i=" + std::to_string(i) + "]",
                [k, i](const CommSeries& x) { return p_prime_k(x, k, i); });
            break;
          default:  // TauJ
            rows.emplace_back(
                "p'[k=" + std::to_string(k) + ",i=" + std::to_string(j) + "]",
                [k, j](const CommSeries& x) { return p_prime_k(x, k, j); });
            break;
        }
      }
    };
    add_rows(left);
    add_rows(right);
    std::function<CommSeries(std::uint32_t)> sequence;
    std::string seq_label;
    if (named) {
      sequence = [i](std::uint32_t n) { return base_null_sequence(i, n); };
      seq_label = "X" + std::to_string(i) + " - X_N";
    } else {
      sequence = [&seq](std::uint32_t n) {
        return parse_comm_auto(seq, static_cast<Letter>(n));
      };
      seq_label = seq;
    }
    table = tabulate<CommSeries>("base-algebra seminorm comparison", seq_label,
                                 indices, rows, sequence, mode);
  } else {
    const auto desc = [&](FamToken t) {
      switch (t) {
        case FamToken::Q:
          return ExtFamilyDesc{ExtSeminormKind::Form::Q, i};
        case FamToken::QPrime:
          return ExtFamilyDesc{ExtSeminormKind::Form::QPrime, i};
        case FamToken::QDel:
          return ExtFamilyDesc{ExtSeminormKind::Form::QDel, i};
        default:
          return ExtFamilyDesc{ExtSeminormKind::Form::QDelPrime, i};
      }
    };
    std::function<ExtElement(std::uint32_t)> sequence;
    std::string seq_label;
    if (!named) {
      sequence = [&seq](std::uint32_t n) {
        return iota(parse_comm_auto(seq, static_cast<Letter>(n)));
      };
      seq_label = "iota(" + seq + ")";
    } else if (seq == "graph_flat") {
      sequence = [i](std::uint32_t n) {
        const CommSeries x = base_null_sequence(i, n);
        return ExtElement(x, partial_derivative(x, i));
      };
      seq_label = "(x_N, d" + std::to_string(i) + " x_N), x_N = X" +
                  std::to_string(i) + " - X_N";
    } else {
      sequence = [i](std::uint32_t n) {
        return iota(base_null_sequence(i, n));
      };
      seq_label = "iota(X" + std::to_string(i) + " - X_N)";
    }
    table = topology_pair_witness({desc(left), desc(right)}, ks, sequence,
                                  seq_label, indices, mode);
  }
  table.title = "seminorm separation witness (" + a.pair + ")";

  const std::string payload = a.out.format == "json"
                                  ? witness_to_json(table).dump(2) + "\n"
                                  : render_text(table);
  emit(payload, a.out.out);
  return 0;
}

// ------------------------------------------------------------ psi-matrix

struct PsiArgs {
  std::uint32_t r = 1;
  Letter n = 1;
  Letter i = 1;
  bool corrupt = false;
  std::string mode = "parallel";
  CommonOut out;
};

int run_psi_cmd(const PsiArgs& a) {
  const PsiMatrix m = psi_matrix(a.r, a.n, a.i, parse_mode(a.mode), a.corrupt);
  const PsiStructure s = analyze_structure(m);
  const std::string payload = a.out.format == "json"
                                  ? psi_matrix_to_json(m, s).dump(2) + "\n"
                                  : psi_matrix_to_text(m, s);
  emit(payload, a.out.out);
  return 0;
}

// --------------------------------------------------------- seminorm-eval

struct EvalArgs {
  std::string alg = "comm";
  std::string family = "tau_c";
  Letter n = 3;
  std::uint32_t m = 3;
  Letter i = 1;
  std::string expr;
  CommonOut out;
};

int run_eval_cmd(const EvalArgs& a) {
  const FunctionalFamily fam = a.family == "tau_i"
                                   ? FunctionalFamily::psi_at(a.i)
                                   : FunctionalFamily::coordinate();
  const TensorSeries elem = a.alg == "comm"
                                ? embed_symmetric(parse_comm_auto(a.expr))
                                : parse_tensor_auto(a.expr);
  const Rational value = a.family == "tau_i"
                             ? tau_i_seminorm(elem, a.n, a.m, fam)
                             : tau_c_seminorm(elem, a.n, a.m);
  const SeminormSpec spec{fam, a.n, a.m};
  if (a.out.format == "json") {
    nlohmann::ordered_json jout;
    jout["seminorm"] = spec.label();
    jout["algebra"] = a.alg;
    jout["input"] = a.expr;
    jout["value"] = to_string(value);
    emit(jout.dump(2) + "\n", a.out.out);
  } else {
    emit(spec.label() + "(" + a.expr + ") = " + to_string(value) + "\n",
         a.out.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "powser: exact truncated power-series algebras, reconstruction "
      "matrices and seminorm separation witnesses"};
  app.require_subcommand(1);

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the exact identity/inequality suites and report");
  verify->add_option("--config", va.config_path, "key=value config file");
  verify->add_option("--max-index", va.max_index,
                     "letters range over {0..max_index}");
  verify->add_option("--max-degree", va.max_degree, "total-degree window");
  verify->add_option("--i-values", va.i_values,
                     "comma list of summing positions");
  verify->add_option("--seed", va.seed, "sampling seed");
  verify->add_option("--samples", va.samples, "cases per sampled check");
  verify->add_option("--psi-samples", va.psi_samples,
                     "roundtrip cases per matrix");
  verify->add_option("--seq-limit", va.seq_limit, "sequence index bound");
  verify->add_option("--m-limit", va.m_limit, "degree-window grid bound");
  verify->add_option("--k-limit", va.k_limit, "diagonal seminorm grid bound");
  verify->add_flag("--corrupt-psi", va.corrupt_psi,
                   "negative control: break the summing functional");
  verify->add_flag("--strict-ctx", va.strict_ctx,
                   "mismatched windows throw instead of meeting");
  verify->add_option("--mode", va.mode, "serial or parallel");
  verify->add_option("--suites", va.suites, "comma list of suites (default all)");
  add_output_options(verify, va.out);

  WitnessArgs wa;
  CLI::App* witness = app.add_subcommand(
      "witness", "tabulate two seminorm families along a sequence");
  witness
      ->add_option("--pair", wa.pair,
                   "two families: tau_c,tau_i,tau_j (base algebra) or "
                   "q,qprime,qdel,qdelprime (extension)")
      ->required();
  witness->add_option("--i", wa.i, "summing position")->capture_default_str();
  witness->add_option("--j", wa.j, "second position for tau_j")
      ->capture_default_str();
  witness->add_option(
      "--seq", wa.seq,
      "named sequence (Xn_to_Xi, Xn_to_Xi_ext, graph_flat) or a series "
      "literal with the placeholder XN");
  witness->add_option("--seq-limit", wa.seq_limit, "N ranges over 1..seq-limit")
      ->capture_default_str();
  witness->add_option("--k-limit", wa.k_limit, "k ranges over 0..k-limit")
      ->capture_default_str();
  witness->add_option("--mode", wa.mode, "serial or parallel")
      ->capture_default_str();
  add_output_options(witness, wa.out);

  PsiArgs pa;
  CLI::App* psi = app.add_subcommand(
      "psi-matrix", "print one reconstruction matrix and its structure");
  psi->add_option("--r", pa.r, "homogeneous degree")->required();
  psi->add_option("--n", pa.n, "letters range over {0..n}")->required();
  psi->add_option("--i", pa.i, "summing position (1..n)")->required();
  psi->add_flag("--corrupt", pa.corrupt,
                "negative control: break the summing functional");
  psi->add_option("--mode", pa.mode, "serial or parallel")
      ->capture_default_str();
  add_output_options(psi, pa.out);

  EvalArgs ea;
  CLI::App* eval = app.add_subcommand(
      "seminorm-eval", "evaluate one window seminorm on a series literal");
  eval->add_option("--alg", ea.alg, "algebra of the literal")
      ->check(CLI::IsMember({"comm", "tensor"}))
      ->capture_default_str();
  eval->add_option("--family", ea.family, "seminorm family")
      ->check(CLI::IsMember({"tau_c", "tau_i"}))
      ->capture_default_str();
  eval->add_option("--n", ea.n, "letter window")->capture_default_str();
  eval->add_option("--m", ea.m, "degree window")->capture_default_str();
  eval->add_option("--i", ea.i, "summing position for tau_i")
      ->capture_default_str();
  eval->add_option("expr", ea.expr, "series literal")->required();
  add_output_options(eval, ea.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify_cmd(verify, va);
    if (witness->parsed()) return run_witness_cmd(wa);
    if (psi->parsed()) return run_psi_cmd(pa);
    return run_eval_cmd(ea);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
