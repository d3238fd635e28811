#include "kdeck/cli.hpp"

#include "kdeck/analysis.hpp"
#include "kdeck/constructions.hpp"
#include "kdeck/deck.hpp"
#include "kdeck/extendable.hpp"
#include "kdeck/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kdeck::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kForceThreshold = 1'000'000;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used, 10);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

CyclicSet parse_set(int n, const std::string& text) {
  std::vector<std::int64_t> xs;
  for (const auto& part : split_list(text)) xs.push_back(parse_int(part));
  return CyclicSet(n, xs);
}

BigInt parse_big(const std::string& s) {
  try {
    if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos) throw std::invalid_argument(s);
    return BigInt(s);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
}

// --set / --mask / --values shared by several subcommands.
struct FunctionInput {
  std::string set;
  std::string mask;
  std::string values;
  std::string denom = "1";

  void attach(CLI::App* cmd) {
    auto* s = cmd->add_option("--set", set, "Comma-separated residues, e.g. 0,3,4");
    auto* m = cmd->add_option("--mask", mask, "Hex membership mask, bit j for residue j");
    auto* v = cmd->add_option("--values", values, "Comma-separated integer numerators f(0),...,f(n-1)");
    cmd->add_option("--denom", denom, "Common positive denominator for --values");
    s->excludes(m)->excludes(v);
    m->excludes(v);
  }

  [[nodiscard]] bool is_set(const CLI::App* cmd) const { return cmd->count("--values") == 0; }

  [[nodiscard]] CyclicSet to_set(const CLI::App* cmd, int n) const {
    if (cmd->count("--mask") > 0) return CyclicSet::from_hex(n, mask);
    if (cmd->count("--set") > 0) return parse_set(n, set);
    if (cmd->count("--values") > 0) throw UsageError("a set is required here; --values is not accepted");
    throw UsageError("one of --set or --mask is required");
  }

  [[nodiscard]] IntFunction to_function(const CLI::App* cmd, int n) const {
    if (!is_set(cmd)) {
      const auto parts = split_list(values);
      if (parts.size() != static_cast<std::size_t>(n))
        throw UsageError("--values needs exactly n = " + std::to_string(n) + " entries");
      std::vector<BigInt> nums;
      for (const auto& p : parts) nums.push_back(parse_big(p));
      const BigInt d = parse_big(denom);
      if (d < 1) throw UsageError("--denom must be positive");
      return IntFunction(n, std::move(nums), d);
    }
    if (cmd->count("--set") == 0 && cmd->count("--mask") == 0)
      throw UsageError("one of --set, --mask or --values is required");
    return IntFunction::indicator(to_set(cmd, n));
  }
};

Json elements_json(const CyclicSet& e) {
  Json arr = Json::array();
  for (int x : e.elements()) arr.push_back(x);
  return arr;
}

std::string big_text(const BigInt& v) { return v.str(); }

Json deck_json(const Deck& d) {
  Json j;
  j["n"] = d.modulus();
  j["k"] = d.order();
  Json values = Json::array();
  if (d.is_integral()) {
    for (std::int64_t v : d.int_values()) values.push_back(v);
  } else {
    for (std::size_t i = 0; i < d.size(); ++i) values.push_back(to_string(d.at(i)));
  }
  j["values"] = std::move(values);
  return j;
}

Json mod_one_json(const ModOneFunction& h) {
  Json j;
  j["denominator"] = big_text(h.denominator);
  Json values = Json::array();
  for (const auto& x : h.numerators) values.push_back(big_text(x));
  j["values"] = std::move(values);
  return j;
}

Json verification_json(const PairVerification& v) {
  Json j;
  j["deck_order"] = v.deck_order;
  j["decks_equal"] = v.decks_equal;
  j["translates"] = v.translates;
  j["decks_equal_at_3"] = v.decks_equal_at_3;
  j["claim_holds"] = v.claim_holds();
  return j;
}

Json pair_json(const CounterexamplePair& p) {
  Json j;
  j["kind"] = to_string(p.kind);
  j["n"] = p.n;
  j["E"] = elements_json(p.e);
  j["F"] = elements_json(p.f);
  j["verified"] = verification_json(p.verified);
  return j;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string seconds_text(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

const char* kSweepHeader = "n,determined,predicate,translation_classes,deck_classes,exception_subsets,seconds";

std::string sweep_row(const ClassificationReport& r) {
  std::ostringstream os;
  os << r.n << ',' << bool_text(r.determined) << ',' << bool_text(good_n_predicate(r.n)) << ','
     << r.num_translation_classes << ',' << r.num_deck_classes << ',' << r.exception_subset_count << ','
     << seconds_text(r.elapsed_seconds);
  return os.str();
}

Json classify_json(const ClassificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["num_subsets"] = r.num_subsets;
  j["translation_classes"] = r.num_translation_classes;
  j["deck_classes"] = r.num_deck_classes;
  j["determined"] = r.determined;
  j["predicate"] = good_n_predicate(r.n);
  j["exception_pair_count"] = r.exception_pair_count;
  j["exception_subsets"] = r.exception_subset_count;
  j["exception_fraction"] = to_string(BigRational(BigInt(r.exception_subset_count), BigInt(r.num_subsets)));
  Json ex = Json::array();
  for (const auto& p : r.exceptions) {
    Json e;
    e["E"] = elements_json(p.e);
    e["F"] = elements_json(p.f);
    ex.push_back(std::move(e));
  }
  j["exceptions"] = std::move(ex);
  j["seconds"] = std::stod(seconds_text(r.elapsed_seconds));
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-deck, spectrum and reconstruction tools for subsets of Z_n", "kdeck"};
  app.require_subcommand(1);

  // deck
  auto* deck_cmd = app.add_subcommand("deck", "k-deck of a set or integer function as JSON");
  int deck_n = 0, deck_k = 3;
  bool deck_digest = false, deck_force = false;
  FunctionInput deck_in;
  deck_cmd->add_option("--n", deck_n, "Modulus")->required()->check(CLI::PositiveNumber);
  deck_cmd->add_option("--k", deck_k, "Deck order")->check(CLI::Range(2, 64));
  deck_in.attach(deck_cmd);
  deck_cmd->add_flag("--digest", deck_digest, "Print only the fingerprint as hex");
  deck_cmd->add_flag("--force", deck_force, "Allow printing more than 10^6 entries");

  // spectrum
  auto* spec_cmd = app.add_subcommand("spectrum", "Exact zero set of the Fourier transform");
  int spec_n = 0;
  FunctionInput spec_in;
  spec_cmd->add_option("--n", spec_n, "Modulus")->required()->check(CLI::PositiveNumber);
  spec_in.attach(spec_cmd);

  // extendable
  auto* ext_cmd = app.add_subcommand("extendable", "Is every additive function on A linear mod 1?");
  int ext_n = 0;
  bool ext_from_set = false;
  FunctionInput ext_in;
  ext_cmd->add_option("--n", ext_n, "Modulus")->required()->check(CLI::PositiveNumber);
  ext_in.attach(ext_cmd);
  ext_cmd->add_flag("--from-set", ext_from_set, "Use the Fourier support of the given set as A");

  // construct
  auto* con_cmd = app.add_subcommand("construct", "Counterexample pairs with exact verification");
  con_cmd->require_subcommand(1);
  bool con_verify = false;
  con_cmd->add_flag("--verify", con_verify, "Exit 1 unless the pair meets its claim");
  con_cmd->fallthrough();
  auto* even_cmd = con_cmd->add_subcommand("even", "n = 2k pair sharing a 3-deck");
  int even_k = 0;
  even_cmd->add_option("--k", even_k, "Half the modulus, at least 6")->required();
  auto* pqrd_cmd = con_cmd->add_subcommand("pqrd", "n = pqrd pair sharing a 3-deck");
  int pp = 0, pq = 0, pr = 0, pd = 0;
  pqrd_cmd->add_option("--p", pp, "Prime")->required();
  pqrd_cmd->add_option("--q", pq, "Prime different from p")->required();
  pqrd_cmd->add_option("--r", pr, "Integer at least 2")->required();
  pqrd_cmd->add_option("--d", pd, "Integer at least 2")->required();
  auto* two_cmd = con_cmd->add_subcommand("twodeck", "E = A + B, F = A - B sharing a 2-deck");
  int two_n = 0;
  std::string two_a, two_b;
  two_cmd->add_option("--n", two_n, "Modulus")->required()->check(CLI::PositiveNumber);
  two_cmd->add_option("--a", two_a, "Set A")->required();
  two_cmd->add_option("--b", two_b, "Set B")->required();

  // classify
  auto* cls_cmd = app.add_subcommand("classify", "Group all subsets of Z_n by 3-deck");
  int cls_n = 0, cls_max_n = 18;
  std::size_t cls_max_ex = 100;
  unsigned cls_threads = 0;
  bool cls_json = false, cls_csv = false;
  cls_cmd->add_option("--n", cls_n, "Modulus")->required()->check(CLI::PositiveNumber);
  cls_cmd->add_option("--max-exceptions", cls_max_ex, "Cap on listed exception pairs");
  cls_cmd->add_option("--max-n", cls_max_n, "Largest n accepted (hard cap 20)")->check(CLI::Range(1, kClassifyHardCap));
  cls_cmd->add_option("--threads", cls_threads, "Worker threads, 0 for the default");
  auto* jflag = cls_cmd->add_flag("--json", cls_json, "JSON output");
  auto* cflag = cls_cmd->add_flag("--csv", cls_csv, "CSV output (sweep columns)");
  jflag->excludes(cflag);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "classify over a range of n, one CSV row each");
  int sw_from = 1, sw_to = 18, sw_max_n = 18;
  unsigned sw_threads = 0;
  sweep_cmd->add_option("--from", sw_from, "First n")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--to", sw_to, "Last n")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--max-n", sw_max_n, "Largest n accepted (hard cap 20)")->check(CLI::Range(1, kClassifyHardCap));
  sweep_cmd->add_option("--threads", sw_threads, "Worker threads, 0 for the default");

  // mc
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo rate of Fourier zeros of random subsets");
  int mc_n = 0;
  std::uint64_t mc_samples = 100000, mc_seed = 0;
  unsigned mc_threads = 0;
  mc_cmd->add_option("--n", mc_n, "Modulus")->required()->check(CLI::PositiveNumber);
  mc_cmd->add_option("--samples", mc_samples, "Number of random subsets")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", mc_seed, "Seed for the counter-based generator")->required();
  mc_cmd->add_option("--threads", mc_threads, "Worker threads, 0 for the default");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (deck_cmd->parsed()) {
      const auto entries = deck_entries(deck_n, deck_k);
      if (entries > kForceThreshold && !deck_force && !deck_digest)
        throw UsageError("deck has " + std::to_string(entries) + " entries; pass --force to print it");
      const bool set_input = deck_in.is_set(deck_cmd);
      const Deck d = set_input && deck_k == 3 ? deck3_set(deck_in.to_set(deck_cmd, deck_n))
                                              : deck(deck_in.to_function(deck_cmd, deck_n), deck_k);
      if (deck_digest) {
        out << fingerprint_hex(deck_fingerprint(d)) << "\n";
      } else {
        out << deck_json(d).dump() << "\n";
      }
      return kExitOk;
    }

    if (spec_cmd->parsed()) {
      const IntFunction f = spec_in.to_function(spec_cmd, spec_n);
      const auto rep = zero_set(f);
      Json j;
      j["n"] = spec_n;
      j["support"] = elements_json(rep.full_support);
      j["zero_frequencies"] = elements_json(rep.zero_mask);
      j["support_divisors"] = rep.support_divisors;
      if (spec_in.is_set(spec_cmd)) {
        const CyclicSet e = spec_in.to_set(spec_cmd, spec_n);
        j["certificate"] = e.empty() ? Json(nullptr) : Json(to_string(determinacy_certificate(e)));
      }
      out << j.dump() << "\n";
      return kExitOk;
    }

    if (ext_cmd->parsed()) {
      CyclicSet a = ext_in.to_set(ext_cmd, ext_n);
      if (ext_from_set) a = zero_set(a).full_support;
      if (a.empty()) throw UsageError("the domain A must be nonempty");
      const auto v = is_extendable(a);
      Json j;
      j["n"] = ext_n;
      j["domain"] = elements_json(a);
      j["extendable"] = v.extendable;
      if (v.witness) j["witness"] = mod_one_json(*v.witness);
      if (v.slope) {
        Json s;
        Json torsion = Json::array();
        for (const auto& g : v.slope->torsion) {
          Json t = mod_one_json(g.generator);
          t["slope"] = to_string(g.slope);
          torsion.push_back(std::move(t));
        }
        s["torsion"] = std::move(torsion);
        s["torus_ratio"] = v.slope->torus_ratio ? Json(to_string(*v.slope->torus_ratio)) : Json(nullptr);
        j["slope"] = std::move(s);
      }
      out << j.dump() << "\n";
      return kExitOk;
    }

    if (con_cmd->parsed()) {
      CounterexamplePair pair = even_cmd->parsed()   ? even_pair(even_k)
                                : pqrd_cmd->parsed() ? pqrd_pair(pp, pq, pr, pd)
                                                     : two_deck_pair(parse_set(two_n, two_a), parse_set(two_n, two_b));
      out << pair_json(pair).dump() << "\n";
      if (con_verify && !pair.verified.claim_holds()) {
        err << "kdeck: verification failed for the " << to_string(pair.kind) << " pair\n";
        return kExitVerificationFailed;
      }
      return kExitOk;
    }

    if (cls_cmd->parsed()) {
      ClassifyOptions opts;
      opts.max_n = cls_max_n;
      opts.max_exceptions = cls_max_ex;
      opts.threads = cls_threads;
      const auto r = classify(cls_n, opts);
      if (cls_json) {
        out << classify_json(r).dump() << "\n";
      } else if (cls_csv) {
        out << kSweepHeader << "\n" << sweep_row(r) << "\n";
      } else {
        out << "n = " << r.n << "\n"
            << "subsets: " << r.num_subsets << "\n"
            << "translation classes: " << r.num_translation_classes << "\n"
            << "deck classes: " << r.num_deck_classes << "\n"
            << "determined: " << bool_text(r.determined) << "\n"
            << "predicate: " << bool_text(good_n_predicate(r.n)) << "\n"
            << "exception pairs: " << r.exception_pair_count << "\n"
            << "exception subsets: " << r.exception_subset_count << "\n";
        for (const auto& p : r.exceptions) out << "  " << p.e.to_hex() << " ~ " << p.f.to_hex() << "\n";
      }
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      if (sw_from > sw_to) throw UsageError("--from must not exceed --to");
      ClassifyOptions opts;
      opts.max_n = sw_max_n;
      opts.max_exceptions = 0;
      opts.threads = sw_threads;
      for (int n = sw_from; n <= sw_to; ++n)
        if (n > std::min(opts.max_n, kClassifyHardCap)) throw UsageError("n = " + std::to_string(n) + " exceeds --max-n");
      out << kSweepHeader << "\n";
      for (int n = sw_from; n <= sw_to; ++n) out << sweep_row(classify(n, opts)) << "\n" << std::flush;
      return kExitOk;
    }

    if (mc_cmd->parsed()) {
      const auto r = zero_probability_mc(mc_n, mc_samples, mc_seed, mc_threads == 0 ? default_threads() : mc_threads);
      Json j;
      j["n"] = r.n;
      j["samples"] = r.samples;
      j["seed"] = r.seed;
      j["generator"] = r.generator;
      j["zero_counts"] = r.zero_counts;
      j["any_zero_count"] = r.any_zero_count;
      j["constant_sample_count"] = r.constant_sample_count;
      j["nonconstant_zero_count"] = r.nonconstant_zero_count;
      j["exact_half_probability"] = r.exact_half_probability ? Json(to_string(*r.exact_half_probability)) : Json(nullptr);
      j["zero_rates"] = r.zero_rates;
      j["zero_rate_std_errors"] = r.zero_rate_std_errors;
      j["any_zero_rate"] = r.any_zero_rate;
      j["any_zero_std_error"] = r.any_zero_std_error;
      out << j.dump() << "\n";
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "kdeck: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DeckTooLarge& e) {
    err << "kdeck: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "kdeck: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace kdeck::cli
