// binofib: evaluate, verify and benchmark binomial Fibonacci/Lucas power sums.
//
// Exit status: 0 success, 1 verification failure or mismatch, 2 usage error.

#include <binofib/binofib.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace {

using namespace binofib;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Index parse_index(std::string_view text, std::string_view what) {
  Index v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (first != last && *first == '+') {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw UsageError(std::string(what) + ": not an integer: '" + std::string(text) + "'");
  }
  return v;
}

/// "a..b" (inclusive) or a single integer "a".
IndexRange parse_range(std::string_view text, std::string_view what) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const Index v = parse_index(text, what);
    return {v, v};
  }
  const IndexRange r{parse_index(text.substr(0, dots), what), parse_index(text.substr(dots + 2), what)};
  if (r.empty()) {
    throw UsageError(std::string(what) + ": empty range '" + std::string(text) + "'");
  }
  return r;
}

ExactRational parse_rational(std::string_view text, std::string_view what) {
  try {
    return ExactRational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not a rational number: '" + std::string(text) + "'");
  }
}

SequenceKind parse_kind(std::string_view text) {
  if (text == "F" || text == "f" || text == "fib") {
    return SequenceKind::fibonacci;
  }
  if (text == "L" || text == "l" || text == "lucas") {
    return SequenceKind::lucas;
  }
  throw UsageError("--seq must be F or L, got '" + std::string(text) + "'");
}

IdentityId parse_id(std::string_view text) {
  if (auto id = parse_identity(text)) {
    return *id;
  }
  throw UsageError("unknown identity id '" + std::string(text) + "' (see `binofib list`)");
}

std::vector<std::string> slot_names(unsigned slots) {
  std::vector<std::string> out;
  const std::pair<unsigned, const char*> all[] = {{kSlotN, "n"}, {kSlotJ, "j"}, {kSlotR, "r"}, {kSlotS, "s"},
                                                  {kSlotP, "p"}, {kSlotM, "m"}, {kSlotX, "x"}, {kSlotZ, "z"}};
  for (const auto& [bit, name] : all) {
    if ((slots & bit) != 0U) {
      out.emplace_back(name);
    }
  }
  return out;
}

/// Raw string flags shared by sum / closed / bench; parsed after CLI11 is done
/// so that negative values and rationals get our own error messages.
struct ParamFlags {
  std::string n = "0";
  std::string j = "1";
  std::string r = "1";
  std::string s = "0";
  std::string p = "1";
  std::string m = "1";
  std::string x = "1";
  std::string z = "1";

  void attach(CLI::App* cmd, bool with_p) {
    cmd->add_option("--n", n, "upper summation limit (n >= 0)")->capture_default_str();
    cmd->add_option("--j", j, "index multiplier")->capture_default_str();
    cmd->add_option("--r", r, "index step")->capture_default_str();
    cmd->add_option("--s", s, "index offset")->capture_default_str();
    if (with_p) {
      cmd->add_option("--p", p, "weight index (Q/E families)")->capture_default_str();
    }
    cmd->add_option("--m", m, "power parameter (m >= 0)")->capture_default_str();
    cmd->add_option("--x", x, "weight x (integer or a/b)")->capture_default_str();
    cmd->add_option("--z", z, "weight z (integer or a/b)")->capture_default_str();
  }

  IdentityParams to_params() const {
    IdentityParams q;
    q.n = parse_index(n, "--n");
    q.j = parse_index(j, "--j");
    q.r = parse_index(r, "--r");
    q.s = parse_index(s, "--s");
    q.p = parse_index(p, "--p");
    q.m = parse_index(m, "--m");
    q.x = parse_rational(x, "--x");
    q.z = parse_rational(z, "--z");
    return q;
  }
};

struct GridFlags {
  std::string ids;
  std::string n = "0..12";
  std::string j = "-4..4";
  std::string r = "-4..4";
  std::string s = "-4..4";
  std::string p = "-4..4";
  std::optional<std::string> m;
  std::optional<std::string> odd_m;
  std::string x = "-2..2";
  std::string z = "-2..2";
  bool include_out_of_contract = false;

  GridSpec to_spec() const {
    GridSpec spec;
    if (!ids.empty()) {
      spec.ids.clear();
      std::string_view rest = ids;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        if (!item.empty()) {
          spec.ids.push_back(parse_id(item));
        }
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
    }
    spec.n = parse_range(n, "--n");
    spec.j = parse_range(j, "--j");
    spec.r = parse_range(r, "--r");
    spec.s = parse_range(s, "--s");
    spec.p = parse_range(p, "--p");
    if (m) {
      spec.m = parse_range(*m, "--m");
      spec.odd_m = spec.m;
    }
    if (odd_m) {
      spec.odd_m = parse_range(*odd_m, "--odd-m");
    }
    spec.x = parse_range(x, "--x");
    spec.z = parse_range(z, "--z");
    spec.skip_inapplicable = !include_out_of_contract;
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return spec;
  }
};

int cmd_seq(SequenceKind kind, const std::string& n_text, bool json) {
  const Index n = parse_index(n_text, "N");
  const BigInt v = sequence_value(kind, n);
  if (json) {
    std::cout << Json{{"seq", std::string(kind_name(kind))}, {"n", n}, {"value", v.get_str()}}.dump() << '\n';
  } else {
    std::cout << v.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_sum(const ParamFlags& flags, const std::string& seq, bool json) {
  const IdentityParams q = flags.to_params();
  if (q.n < 0) {
    throw UsageError("--n must be non-negative");
  }
  if (q.m < 0) {
    throw UsageError("--m must be non-negative");
  }
  const ExactRational v =
      direct_sum({.n = q.n, .x = q.x, .z = q.z, .j = q.j, .r = q.r, .s = q.s, .m = q.m, .kind = parse_kind(seq)});
  if (json) {
    std::cout << Json{{"value", v.to_string()}}.dump() << '\n';
  } else {
    std::cout << v << '\n';
  }
  return kExitOk;
}

int cmd_closed(const std::string& id_text, const ParamFlags& flags, bool json) {
  const IdentityId id = parse_id(id_text);
  const IdentityParams q = flags.to_params();
  if (auto ok = applicable(id, q); !ok) {
    throw UsageError(identity_name(id).data() + std::string(": inapplicable parameters: ") + ok.reason);
  }
  const PairResult res = eval_pair(id, q);
  if (json) {
    Json out;
    out["id"] = std::string(identity_name(id));
    out["params"] = params_to_json(id, q);
    out["lhs"] = res.lhs.to_string();
    out["rhs"] = res.rhs.to_string();
    out["match"] = res.match;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "lhs=" << res.lhs << " rhs=" << res.rhs << (res.match ? " MATCH" : " MISMATCH") << '\n';
  }
  return res.match ? kExitOk : kExitFailed;
}

int cmd_verify(const GridFlags& flags, unsigned jobs, bool json) {
  const GridSpec spec = flags.to_spec();
  const Report report = run_grid(spec, jobs);
  if (json) {
    std::cout << to_json_lines(report);
  } else {
    std::cout << summarize(report);
  }
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_bench(const std::string& id_text, const ParamFlags& flags, int reps, bool json) {
  const IdentityId id = parse_id(id_text);
  const IdentityParams q = flags.to_params();
  if (auto ok = applicable(id, q); !ok) {
    throw UsageError(identity_name(id).data() + std::string(": inapplicable parameters: ") + ok.reason);
  }
  if (reps < 1) {
    throw UsageError("--reps must be positive");
  }
  BenchResult b;
  try {
    b = bench_identity(id, q, reps);
  } catch (const std::runtime_error& e) {
    std::cerr << "binofib: " << e.what() << '\n';
    return kExitFailed;
  }
  if (json) {
    Json out;
    out["id"] = std::string(identity_name(id));
    out["params"] = params_to_json(id, q);
    out["reps"] = reps;
    out["oracle_median_s"] = b.oracle_median_s;
    out["closed_median_s"] = b.closed_median_s;
    out["speedup"] = b.speedup();
    out["equal"] = true;
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  std::ostringstream os;
  os << std::scientific << std::setprecision(3);
  os << "identity   " << identity_name(id) << "  " << format_params(id, q) << '\n';
  os << "reps       " << reps << '\n';
  os << "oracle     median " << b.oracle_median_s << " s\n";
  os << "closed     median " << b.closed_median_s << " s\n";
  os << std::fixed << std::setprecision(2);
  os << "speedup    " << b.speedup() << "x\n";
  os << "equality   verified (" << b.value.to_string().size() << " digits)\n";
  std::cout << os.str();
  return kExitOk;
}

int cmd_list(bool json) {
  for (const auto& d : catalog()) {
    const auto slots = slot_names(d.slots);
    if (json) {
      Json out;
      out["id"] = std::string(d.name);
      out["slots"] = slots;
      out["anchor"] = std::string(d.anchor);
      std::cout << out.dump() << '\n';
    } else {
      std::string slot_text;
      for (const auto& s : slots) {
        slot_text += slot_text.empty() ? s : "," + s;
      }
      std::cout << std::left << std::setw(12) << d.name << std::setw(14) << slot_text << d.anchor << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation and verification of binomial Fibonacci/Lucas power sums"};
  app.require_subcommand(1);

  std::string format = "text";
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for verify")->check(CLI::PositiveNumber);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  std::string n_text;
  auto* fib_cmd = app.add_subcommand("fib", "print F_N");
  fib_cmd->add_option("N", n_text, "index (any integer)")->required();
  add_common(fib_cmd);
  auto* lucas_cmd = app.add_subcommand("lucas", "print L_N");
  lucas_cmd->add_option("N", n_text, "index (any integer)")->required();
  add_common(lucas_cmd);

  ParamFlags sum_flags;
  std::string seq = "F";
  auto* sum_cmd = app.add_subcommand("sum", "direct sum of C(n,k) x^(n-k) z^k W_{j(rk+s)}^m");
  sum_flags.attach(sum_cmd, false);
  sum_cmd->add_option("--seq", seq, "F or L")->capture_default_str();
  add_common(sum_cmd);

  ParamFlags closed_flags;
  std::string closed_id;
  auto* closed_cmd = app.add_subcommand("closed", "evaluate both sides of one identity");
  closed_cmd->add_option("--id", closed_id, "identity id")->required();
  closed_flags.attach(closed_cmd, true);
  add_common(closed_cmd);

  GridFlags grid;
  auto* verify_cmd = app.add_subcommand("verify", "check identities over a parameter grid");
  verify_cmd->add_option("--ids", grid.ids, "comma-separated identity ids (default: all)");
  verify_cmd->add_option("--n", grid.n, "range A..B")->capture_default_str();
  verify_cmd->add_option("--j", grid.j, "range A..B")->capture_default_str();
  verify_cmd->add_option("--r", grid.r, "range A..B")->capture_default_str();
  verify_cmd->add_option("--s", grid.s, "range A..B")->capture_default_str();
  verify_cmd->add_option("--p", grid.p, "range A..B")->capture_default_str();
  verify_cmd->add_option("--m", grid.m, "range A..B (default 0..3 even families, 0..2 odd families)");
  verify_cmd->add_option("--odd-m", grid.odd_m, "range A..B for the odd-power families");
  verify_cmd->add_option("--x", grid.x, "integer range for x (F1, L1, T1_*)")->capture_default_str();
  verify_cmd->add_option("--z", grid.z, "integer range for z (F1, L1, T1_*)")->capture_default_str();
  verify_cmd->add_flag("--include-out-of-contract", grid.include_out_of_contract,
                       "evaluate points outside an identity's stated domain instead of skipping them");
  add_common(verify_cmd);

  ParamFlags bench_flags;
  std::string bench_id;
  int reps = 5;
  auto* bench_cmd = app.add_subcommand("bench", "time direct summation against the closed form");
  bench_cmd->add_option("--id", bench_id, "identity id")->required();
  bench_flags.attach(bench_cmd, true);
  bench_cmd->add_option("--reps", reps, "repetitions per side")->capture_default_str();
  add_common(bench_cmd);

  auto* list_cmd = app.add_subcommand("list", "list the identity catalog");
  add_common(list_cmd);

  // Values such as "-4..4" or "-7" must reach the options, not be read as flags.
  app.allow_extras(false);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (fib_cmd->parsed()) return cmd_seq(SequenceKind::fibonacci, n_text, json);
    if (lucas_cmd->parsed()) return cmd_seq(SequenceKind::lucas, n_text, json);
    if (sum_cmd->parsed()) return cmd_sum(sum_flags, seq, json);
    if (closed_cmd->parsed()) return cmd_closed(closed_id, closed_flags, json);
    if (verify_cmd->parsed()) return cmd_verify(grid, jobs, json);
    if (bench_cmd->parsed()) return cmd_bench(bench_id, bench_flags, reps, json);
    if (list_cmd->parsed()) return cmd_list(json);
  } catch (const UsageError& e) {
    std::cerr << "binofib: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InapplicableError& e) {
    std::cerr << "binofib: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
