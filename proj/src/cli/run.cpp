#include "wph/cli/run.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "wph/errors.hpp"
#include "wph/heights/enumerate.hpp"
#include "wph/heights/height.hpp"
#include "wph/projective/point.hpp"
#include "wph/projective/well_form.hpp"
#include "wph/wgcd/wgcd.hpp"

namespace wph::cli {

namespace {

struct Invocation {
  std::string command;
  std::string weights_text;
  std::vector<std::string> tuples;
  std::optional<std::string> bound_text;
  bool direct = false;
  bool records = false;
  FactorConfig factor;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, std::size_t>& tuple_arity() {
  static const std::map<std::string, std::size_t> arity = {
      {"wgcd", 1},      {"awgcd", 1},    {"normalize", 1}, {"canon", 1},
      {"equiv", 2},     {"size", 1},     {"height", 1},    {"logheight", 1},
      {"phi", 1},       {"preimage", 1}, {"enumerate", 0}, {"count", 0},
      {"wellform", 0},  {"kronecker", 1}};
  return arity;
}

// Line writer for both output modes: text prints bare values, records
// prints key=value.
class Emitter {
 public:
  Emitter(std::ostream& out, const Invocation& inv)
      : out_(out), records_(inv.records) {
    if (records_) out_ << "command=" << inv.command << '\n';
  }

  void value(const std::string& key, const std::string& v) {
    if (records_) {
      out_ << key << '=' << v << '\n';
    } else {
      out_ << v << '\n';
    }
  }

  void record_only(const std::string& line) {
    if (records_) out_ << line << '\n';
  }

  void raw(const std::string& text_line, const std::string& record_line) {
    out_ << (records_ ? record_line : text_line) << '\n';
  }

 private:
  std::ostream& out_;
  bool records_;
};

std::string format_log(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

WeightedPoint point_from(const std::string& text, const WeightSystem& w) {
  return WeightedPoint(parse_rational_list(text), w);
}

void dispatch(const Invocation& inv, std::ostream& out) {
  WeightSystem w(parse_positive_list(inv.weights_text));
  const FactorConfig& cfg = inv.factor;
  Emitter emit(out, inv);
  const std::string& cmd = inv.command;

  auto bound = [&]() {
    if (!inv.bound_text) {
      throw UsageError("command '" + cmd + "' requires -B/--bound");
    }
    return ExactRoot::parse(*inv.bound_text);
  };

  if (cmd == "wgcd" || cmd == "awgcd") {
    WeightedPoint p = point_from(inv.tuples[0], w);
    if (cmd == "wgcd") {
      Integer d = p.is_integral() ? wgcd(p.as_tuple(), cfg)
                                  : generalized_wgcd(p.coords(), w, cfg);
      emit.value("wgcd", to_string(d));
    } else {
      ExactRoot d = p.is_integral() ? awgcd(p.as_tuple(), cfg)
                                    : generalized_awgcd(p.coords(), w, cfg);
      emit.value("awgcd", d.to_string());
    }
  } else if (cmd == "normalize") {
    emit.value("point", normalize(point_from(inv.tuples[0], w), cfg).to_string());
  } else if (cmd == "canon") {
    emit.value("point",
               canonical_rep(point_from(inv.tuples[0], w), cfg).to_string());
  } else if (cmd == "equiv") {
    auto lambda = equivalent(point_from(inv.tuples[0], w),
                             point_from(inv.tuples[1], w));
    if (lambda) {
      emit.raw("lambda=" + to_string(*lambda),
               "equivalent=true\nlambda=" + to_string(*lambda));
    } else {
      emit.raw("not equivalent", "equivalent=false");
    }
  } else if (cmd == "size") {
    emit.value("size", naive_size(point_from(inv.tuples[0], w), cfg).to_string());
  } else if (cmd == "height") {
    WeightedPoint p = point_from(inv.tuples[0], w);
    ExactRoot h = inv.direct ? weighted_height_direct(p, cfg)
                             : weighted_height(p);
    emit.value("height", h.to_string());
  } else if (cmd == "logheight") {
    emit.value("logheight",
               format_log(log_weighted_height(point_from(inv.tuples[0], w))));
  } else if (cmd == "phi") {
    emit.value("point", phi(point_from(inv.tuples[0], w)).to_string());
  } else if (cmd == "preimage") {
    ProjectivePoint y =
        ProjectivePoint::from_rationals(parse_rational_list(inv.tuples[0]));
    if (y.size() != w.size()) {
      throw LengthMismatchError("point and weights differ in length");
    }
    auto x = phi_preimage(y, w, cfg);
    emit.value("preimage", x ? x->to_string() : "none");
  } else if (cmd == "enumerate") {
    auto points = enumerate_bounded(w, bound(), cfg);
    for (const auto& bp : points) {
      emit.raw(bp.point.to_string() + " h=" + bp.height.to_string(),
               "point=" + bp.point.to_string() +
                   " height=" + bp.height.to_string());
    }
    emit.record_only("count=" + std::to_string(points.size()));
  } else if (cmd == "count") {
    emit.value("count", std::to_string(counting_function(w, bound(), cfg)));
  } else if (cmd == "wellform") {
    WellFormingResult result = well_form(w);
    emit.value("weights", result.new_weights.to_string());
    for (const auto& step : result.steps) {
      std::string where =
          step.pivot ? "pivot=" + std::to_string(*step.pivot) : "global";
      std::string record_where =
          step.pivot ? std::to_string(*step.pivot) : "global";
      emit.raw("divide d=" + std::to_string(step.divisor) + " " + where,
               "step=" + std::to_string(step.divisor) + ":" + record_where);
    }
  } else if (cmd == "kronecker") {
    KroneckerReport report = kronecker_check(point_from(inv.tuples[0], w));
    emit.raw(bool_text(report.height_one) + " ratio_condition=" +
                 bool_text(report.ratio_condition),
             "height_one=" + bool_text(report.height_one) +
                 "\nratio_condition=" + bool_text(report.ratio_condition));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Invocation inv;
  CLI::App app{"Weighted gcds, normalization and heights in weighted "
               "projective space over the rationals",
               "wph"};
  std::set<std::string> commands;
  for (const auto& [name, n] : tuple_arity()) commands.insert(name);
  app.add_option("command", inv.command, "Operation to run")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("tuples", inv.tuples,
                 "Comma-separated coordinates (a or a/b); put '--' before a "
                 "tuple starting with '-'");
  app.add_option("-w,--weights", inv.weights_text,
                 "Comma-separated positive weights")
      ->required();
  app.add_option("-B,--bound", inv.bound_text,
                 "Height bound: a rational or root(m,k)");
  app.add_flag("--records", inv.records, "Print key=value records");
  app.add_flag("--direct", inv.direct)->group("");
  app.add_option("--factor-bound", inv.factor.trial_bound,
                 "Trial-division cutoff")
      ->check(CLI::Range(2ULL, 1'000'000'000ULL));
  app.add_option("--seed", inv.factor.seed, "Seed for the rho stage");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsageError;
  }

  std::size_t expected = tuple_arity().at(inv.command);
  if (inv.tuples.size() != expected) {
    err << "usage: command '" << inv.command << "' takes " << expected
        << " tuple(s), got " << inv.tuples.size() << '\n';
    return kUsageError;
  }

  if ((inv.command == "enumerate" || inv.command == "count") &&
      !inv.bound_text) {
    err << "usage: command '" << inv.command << "' requires -B/--bound\n";
    return kUsageError;
  }

  // Output is held back until the command succeeds, so a failing call
  // prints only its diagnostic.
  std::ostringstream buffer;
  try {
    dispatch(inv, buffer);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kDomainError;
  } catch (const LengthMismatchError& e) {
    err << "error: length mismatch: " << e.what() << '\n';
    return kDomainError;
  } catch (const ZeroTupleError& e) {
    err << "error: zero tuple: " << e.what() << '\n';
    return kDomainError;
  } catch (const FactorizationIncomplete& e) {
    err << "error: factorization incomplete: " << e.what() << '\n';
    return kDomainError;
  } catch (const DomainError& e) {
    err << "error: domain: " << e.what() << '\n';
    return kDomainError;
  }
  out << buffer.str();
  return kOk;
}

}  // namespace wph::cli
