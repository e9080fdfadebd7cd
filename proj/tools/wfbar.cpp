// wfbar: command-line front end.
//
// Exit codes: 0 ok, 2 parse or usage error, 3 invariant violation,
// 4 failure of an entropy pipeline member (or an empty manifest).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wfbar/wfbar.hpp"

namespace fs = std::filesystem;
using namespace wfbar;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MemberFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

// Runs `fn` with either the named file or stdout.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  fn(out);
}

template <typename T, typename Fn>
T parse_file(const std::string& path, Fn&& reader) {
  auto in = open_input(path);
  try {
    return reader(in);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

FilteredComplex load_complex(const std::string& path) {
  return parse_file<FilteredComplex>(path, [](std::istream& in) { return read_complex(in); });
}
Barcode load_barcode(const std::string& path) {
  return parse_file<Barcode>(path, [](std::istream& in) { return read_barcode(in); });
}
ChordSpectrum load_spectrum(const std::string& path) {
  return parse_file<ChordSpectrum>(path, [](std::istream& in) { return read_spectrum(in); });
}
ConvexProfile load_profile(const std::string& path) {
  return parse_file<ConvexProfile>(path, [](std::istream& in) { return read_profile(in); });
}

// "a,b,c" or "lo:hi:n" (n evenly spaced values, inclusive).
std::vector<double> parse_grid(const std::string& spec, const char* what) {
  std::vector<double> out;
  try {
    if (spec.find(':') != std::string::npos) {
      std::vector<std::string> parts;
      std::stringstream ss(spec);
      for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
      if (parts.size() != 3) throw UsageError(std::string(what) + ": expected lo:hi:n");
      const double lo = text::parse_real(parts[0], 0), hi = text::parse_real(parts[1], 0);
      const auto n = text::parse_count(parts[2], 0);
      if (n < 2) throw UsageError(std::string(what) + ": need at least two points");
      for (std::uint64_t i = 0; i < n; ++i)
        out.push_back(i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    } else {
      std::stringstream ss(spec);
      for (std::string p; std::getline(ss, p, ',');) out.push_back(text::parse_real(p, 0));
    }
  } catch (const ParseError&) {
    throw UsageError(std::string(what) + ": cannot parse '" + spec + "'");
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

Point2 parse_point(const std::vector<double>& v, const char* what) {
  if (v.size() != 2) throw UsageError(std::string(what) + " needs two coordinates");
  return {v[0], v[1]};
}

// ---------------------------------------------------------------------------
// Entropy manifests
//
//   entropy-manifest v1
//   spectrum <path> | exp <h> <t_max> | torus <px> <py> <qx> <qy> <t_max>
//   model trivial | model planted constant <g> | uniform <a> <b> | exponential <mean>
//   seed <n>
//   zero <count>
//   normalization truncation | scaling
//   member <x> <level> complex|barcode <path>
//
// Paths are relative to the manifest. A manifest has either one spectrum
// source (members come from --schedule) or explicit member lines.

struct Manifest {
  std::string source_kind;  // "", spectrum, exp, torus
  std::vector<std::string> source_args;
  std::size_t source_line = 0;
  std::string model_kind = "trivial";
  std::vector<std::string> model_args;
  std::uint64_t seed = 0;
  long long zero = 0;
  std::optional<Normalization> normalization;
  struct Member {
    double x, level;
    std::string kind, path;
    std::size_t line;
  };
  std::vector<Member> members;
};

Manifest read_manifest(std::istream& in, const fs::path& base) {
  Manifest m;
  bool header = false;
  text::for_each_record(in, [&](std::size_t line, const auto& tok) {
    auto need = [&](std::size_t n, const char* usage) {
      if (tok.size() != n) throw ParseError(line, std::string("expected: ") + usage);
    };
    const std::string key(tok[0]);
    if (!header) {
      if (tok.size() != 2 || key != "entropy-manifest" || tok[1] != "v1")
        throw ParseError(line, "expected header 'entropy-manifest v1'");
      header = true;
      return;
    }
    if (key == "spectrum" || key == "exp" || key == "torus") {
      if (!m.source_kind.empty()) throw ParseError(line, "second spectrum source");
      if (key == "spectrum") need(2, "spectrum <path>");
      if (key == "exp") need(3, "exp <h> <t_max>");
      if (key == "torus") need(6, "torus <px> <py> <qx> <qy> <t_max>");
      m.source_kind = key;
      m.source_line = line;
      for (std::size_t i = 1; i < tok.size(); ++i) m.source_args.emplace_back(tok[i]);
      if (key == "spectrum") m.source_args[0] = (base / m.source_args[0]).string();
      else
        for (const auto& a : m.source_args) text::parse_real(a, line);
    } else if (key == "model") {
      if (tok.size() < 2) throw ParseError(line, "expected: model trivial|planted ...");
      m.model_kind = std::string(tok[1]);
      m.model_args.clear();
      for (std::size_t i = 2; i < tok.size(); ++i) m.model_args.emplace_back(tok[i]);
      if (m.model_kind == "trivial") {
        need(2, "model trivial");
      } else if (m.model_kind == "planted") {
        if (tok.size() < 3) throw ParseError(line, "expected: model planted <distribution> <params>");
        const std::string dist(tok[2]);
        if (dist == "constant" || dist == "exponential") need(4, "model planted constant|exponential <value>");
        else if (dist == "uniform") need(5, "model planted uniform <lo> <hi>");
        else throw ParseError(line, "unknown gap distribution '" + dist + "'");
        for (std::size_t i = 3; i < tok.size(); ++i) text::parse_real(tok[i], line);
      } else {
        throw ParseError(line, "unknown model '" + m.model_kind + "'");
      }
    } else if (key == "seed") {
      need(2, "seed <n>");
      m.seed = text::parse_count(tok[1], line);
    } else if (key == "zero") {
      need(2, "zero <count>");
      m.zero = static_cast<long long>(text::parse_count(tok[1], line));
    } else if (key == "normalization") {
      need(2, "normalization truncation|scaling");
      if (tok[1] == "truncation") m.normalization = Normalization::truncation;
      else if (tok[1] == "scaling") m.normalization = Normalization::scaling;
      else throw ParseError(line, "unknown normalization '" + std::string(tok[1]) + "'");
    } else if (key == "member") {
      need(5, "member <x> <level> complex|barcode <path>");
      const std::string kind(tok[3]);
      if (kind != "complex" && kind != "barcode") throw ParseError(line, "member kind must be complex or barcode");
      m.members.push_back({text::parse_real(tok[1], line), text::parse_real(tok[2], line), kind,
                           (base / std::string(tok[4])).string(), line});
    } else {
      throw ParseError(line, "unknown record '" + key + "'");
    }
  });
  if (!header) throw ParseError(0, "missing header 'entropy-manifest v1'");
  if (!m.source_kind.empty() && !m.members.empty())
    throw ParseError(m.source_line, "a manifest has either a spectrum source or member lines, not both");
  return m;
}

SpectrumModel manifest_model(const Manifest& m) {
  if (m.model_kind == "trivial") return SpectrumModel::trivial();
  const auto& a = m.model_args;
  auto v = [&](std::size_t i) { return text::parse_real(a[i], 0); };
  GapDistribution gaps = ConstantGap{0.1};
  if (a[0] == "constant") gaps = ConstantGap{v(1)};
  else if (a[0] == "uniform") gaps = UniformGap{v(1), v(2)};
  else gaps = ExponentialGap{v(1)};
  return SpectrumModel::planted(gaps, m.seed);
}

ChordSpectrum manifest_spectrum(const Manifest& m) {
  auto v = [&](std::size_t i) { return text::parse_real(m.source_args[i], m.source_line); };
  if (m.source_kind == "spectrum") return load_spectrum(m.source_args[0]);
  if (m.source_kind == "exp") return exp_spectrum(v(0), v(1));
  return torus_spectrum({v(0), v(1)}, {v(2), v(3)}, v(4));
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_reduce(const std::string& input, const std::string& output) {
  const Barcode B = reduce(load_complex(input));
  with_output(output, [&](std::ostream& out) { write_barcode(out, B); });
  return 0;
}

int cmd_distance(const std::string& a, const std::string& b) {
  const double d = bottleneck(load_barcode(a), load_barcode(b));
  if (std::isinf(d)) std::cout << "inf\n";
  else std::printf("%.12g\n", d);
  return 0;
}

struct EntropyArgs {
  std::string manifest, eps = "1,0.5,0.25,0.1", schedule, profile, output, counts;
  double window = 0.5;
  bool positive = false;
};

int cmd_entropy(const EntropyArgs& args) {
  auto in = open_input(args.manifest);
  Manifest m;
  try {
    m = read_manifest(in, fs::path(args.manifest).parent_path());
  } catch (const ParseError& e) {
    throw ParseError(0, args.manifest + ": " + e.what());
  }
  const auto eps = parse_grid(args.eps, "--eps");
  EntropyOptions options;
  options.window_fraction = args.window;

  if (m.source_kind.empty() && m.members.empty()) throw MemberFailure("manifest lists no inputs");

  std::vector<ComplexMember> complexes;
  std::optional<ScalingFamily> family;
  if (!m.source_kind.empty()) {
    if (args.schedule.empty()) throw UsageError("--schedule is required for a spectrum manifest");
    const auto schedule = parse_grid(args.schedule, "--schedule");
    ChordSpectrum S;
    try {
      S = manifest_spectrum(m);
    } catch (const std::exception& e) {
      throw MemberFailure("spectrum source (manifest line " + std::to_string(m.source_line) + "): " + e.what());
    }
    const SpectrumModel model = manifest_model(m);
    if (!args.profile.empty()) {
      const ConvexProfile P = load_profile(args.profile);
      try {
        complexes = hamiltonian_members(P, S, schedule, model, m.zero);
      } catch (const std::exception& e) {
        throw MemberFailure(std::string("scaled member: ") + e.what());
      }
      if (m.normalization == Normalization::truncation)
        throw UsageError("a profile family uses scaling normalization");
      m.normalization = Normalization::scaling;
    } else {
      for (double t : schedule)
        if (t > S.cutoff())
          throw MemberFailure("schedule level " + text::format_real(t) + " exceeds the spectrum cutoff " +
                              text::format_real(S.cutoff()));
      try {
        if (args.positive) {
          // The split threshold is chosen per member, so each level gets its own complex.
          for (double t : schedule) complexes.push_back({t, t, complex_from_spectrum(S.truncated(t), model, m.zero)});
          m.normalization = Normalization::truncation;
        }
      } catch (const std::exception& e) {
        throw MemberFailure(std::string("spectrum complex: ") + e.what());
      }
      if (!args.positive) try {
        complexes.push_back({0.0, 0.0, complex_from_spectrum(S, model, m.zero)});
        const auto reduced = reduce_family(complexes, Normalization::truncation);
        family = truncation_family(*reduced.members.front().barcode, schedule);
      } catch (const std::exception& e) {
        throw MemberFailure(std::string("spectrum complex: ") + e.what());
      }
    }
  } else {
    for (const auto& mem : m.members) {
      try {
        if (mem.kind == "barcode") {
          if (!family) family = ScalingFamily{m.normalization.value_or(Normalization::truncation), {}};
          family->members.push_back({mem.x, mem.level, std::make_shared<const Barcode>(load_barcode(mem.path))});
        } else {
          complexes.push_back({mem.x, mem.level, load_complex(mem.path)});
        }
      } catch (const std::exception& e) {
        throw MemberFailure("member '" + mem.path + "' (manifest line " + std::to_string(mem.line) + "): " + e.what());
      }
    }
    if (family && !complexes.empty()) throw UsageError("manifest mixes complex and barcode members");
  }

  if (!family) {
    if (args.positive) {
      const auto cmp = positive_part_entropy(complexes, half_smallest_positive_action(), eps,
                                             m.normalization.value_or(Normalization::truncation),
                                             kEntropyChainTolerance, options);
      with_output(args.output, [&](std::ostream& out) { write_entropy_tsv(out, cmp.positive); });
      std::cerr << "full headline " << text::format_real(cmp.full.headline) << ", positive headline "
                << text::format_real(cmp.positive.headline) << ", chain " << (cmp.ok ? "ok" : "violated") << '\n';
      if (!args.counts.empty())
        with_output(args.counts, [&](std::ostream& out) { write_counts_table(out, cmp.positive); });
      return 0;
    }
    for (std::size_t i = 0; i < complexes.size(); ++i) {
      if (!validate(complexes[i].complex))
        throw MemberFailure("member " + std::to_string(i) + ": " + validate(complexes[i].complex).message);
    }
    try {
      family = reduce_family(complexes, m.normalization.value_or(Normalization::truncation));
    } catch (const std::exception& e) {
      throw MemberFailure(e.what());
    }
  }
  if (args.positive) throw UsageError("--positive needs complex members");
  const EntropyReport report = barcode_entropy(*family, eps, options);
  with_output(args.output, [&](std::ostream& out) { write_entropy_tsv(out, report); });
  if (!args.counts.empty()) with_output(args.counts, [&](std::ostream& out) { write_counts_table(out, report); });
  return 0;
}

PlaneCurve read_curve_table(const std::string& path, bool closed) {
  auto in = open_input(path);
  std::vector<Point2> pts;
  try {
    text::for_each_record(in, [&](std::size_t line, const auto& tok) {
      if (tok.size() != 2) throw ParseError(line, "expected: <x> <y>");
      pts.push_back({text::parse_real(tok[0], line), text::parse_real(tok[1], line)});
    });
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
  try {
    return PlaneCurve::polyline(std::move(pts), closed);
  } catch (const std::invalid_argument& e) {
    throw InvariantViolation(path + ": " + e.what());
  }
}

struct CroftonArgs {
  std::string curve = "circle", table, output;
  std::vector<double> params;
  bool closed = false;
  double scale = 1.0;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
};

PlaneCurve named_curve(const std::string& name, const std::vector<double>& p) {
  auto arg = [&](std::size_t i, double fallback) { return i < p.size() ? p[i] : fallback; };
  if (name == "circle") return curves::circle(arg(0, 1.0));
  if (name == "ellipse") return curves::ellipse(arg(0, 2.0), arg(1, 1.0));
  if (name == "segment") return curves::segment(arg(0, 1.0));
  if (name == "polygon") return curves::regular_polygon(static_cast<std::size_t>(arg(0, 6)), arg(1, 1.0));
  if (name == "star") return curves::star(static_cast<std::size_t>(arg(0, 5)), arg(1, 1.0), arg(2, 0.4));
  if (name == "spiral") return curves::spiral(arg(0, 0.1), arg(1, 3.0));
  if (name == "sine") return curves::sine_graph(arg(0, 6.0), arg(1, 1.0), arg(2, 2.0));
  if (name == "limacon") return curves::limacon(arg(0, 1.0), arg(1, 0.5));
  if (name == "lemniscate") return curves::lemniscate(arg(0, 1.0));
  throw UsageError("unknown curve '" + name + "'");
}

int cmd_crofton(const CroftonArgs& a) {
  PlaneCurve curve = a.table.empty() ? named_curve(a.curve, a.params) : read_curve_table(a.table, a.closed);
  if (a.scale != 1.0) curve = curve.scaled(a.scale);
  const auto r = crofton_lines(curve, a.samples, a.seed);
  with_output(a.output, [&](std::ostream& out) { write_crofton_tsv(out, r); });
  return 0;
}

struct TomographArgs {
  std::vector<double> g_cos, g_sin;
  std::size_t basis = 2;
  double radius = 1.0;
  std::size_t samples = 100000, calibration_samples = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_tomograph(const TomographArgs& a) {
  TrigPolynomial g{0.0, a.g_cos, a.g_sin};
  const auto r = tomograph_census(g, a.basis, a.radius, a.samples, a.seed);
  with_output(a.output, [&](std::ostream& out) {
    if (a.calibration_samples == 0) {
      write_tomograph_tsv(out, r);
      return;
    }
    const auto cal = calibrate_tomograph(a.basis, a.radius, a.calibration_samples, a.seed);
    const double L = g.derivative_graph_length();
    out << "mean_n\tmax_n\tdegenerate_fraction\tstderr\tn_samples\tseed\tconstant\tgraph_length\tbound\n";
    out << text::format_real(r.mean_n) << '\t' << r.max_n << '\t' << text::format_real(r.degenerate_fraction) << '\t'
        << text::format_real(r.stderr_) << '\t' << r.n_samples << '\t' << r.seed << '\t'
        << text::format_real(cal.constant) << '\t' << text::format_real(L) << '\t'
        << text::format_real(cal.constant * L) << '\n';
  });
  return 0;
}

struct SpectrumArgs {
  std::string kind, output, complex_model, gap = "constant:0.1";
  double h = 0.5, t_max = 10.0;
  std::vector<double> p{0.0, 0.0}, q{0.5, 0.5};
  std::vector<double> hp{0.0, 2.0}, hq{0.0, 2.0};
  std::vector<std::vector<double>> generators;
  int word_length = 8;
  std::uint64_t seed = 0;
  long long zero = 0;
};

GapDistribution parse_gap(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const auto vals = colon == std::string::npos ? std::vector<double>{} : parse_grid(spec.substr(colon + 1), "--gap");
  if (name == "constant" && vals.size() == 1) return ConstantGap{vals[0]};
  if (name == "uniform" && vals.size() == 2) return UniformGap{vals[0], vals[1]};
  if (name == "exponential" && vals.size() == 1) return ExponentialGap{vals[0]};
  throw UsageError("--gap: expected constant:<g>, uniform:<lo>,<hi> or exponential:<mean>");
}

int cmd_spectrum(const SpectrumArgs& a) {
  ChordSpectrum S;
  if (a.kind == "torus") {
    S = torus_spectrum(parse_point(a.p, "--p"), parse_point(a.q, "--q"), a.t_max);
  } else if (a.kind == "exp") {
    S = exp_spectrum(a.h, a.t_max);
  } else {
    if (a.generators.empty()) throw UsageError("schottky needs at least one --gen a,b,c,d");
    std::vector<SL2R> gens;
    for (const auto& g : a.generators) {
      if (g.size() != 4) throw UsageError("--gen needs four entries a,b,c,d");
      gens.push_back({g[0], g[1], g[2], g[3]});
    }
    const Point2 p = parse_point(a.hp, "--hp"), q = parse_point(a.hq, "--hq");
    const auto res = schottky_spectrum(gens, {p.x, p.y}, {q.x, q.y}, a.word_length);
    S = res.spectrum;
    std::cerr << "completeness radius " << text::format_real(res.completeness_radius)
              << (res.certified ? "" : " (not certified)") << ", entries beyond it " << res.beyond_radius << '\n';
  }
  with_output(a.output, [&](std::ostream& out) {
    if (a.complex_model.empty()) {
      write_spectrum(out, S);
      return;
    }
    SpectrumModel model;
    if (a.complex_model == "planted") model = SpectrumModel::planted(parse_gap(a.gap), a.seed);
    else if (a.complex_model != "trivial") throw UsageError("--complex must be trivial or planted");
    write_complex(out, complex_from_spectrum(S, model, a.zero));
  });
  return 0;
}

int cmd_split(const std::string& input, double tau, const std::string& low, const std::string& quotient) {
  const auto d = split_at(load_complex(input), tau);
  with_output(low, [&](std::ostream& out) { write_complex(out, d.low); });
  with_output(quotient, [&](std::ostream& out) { write_complex(out, d.quotient); });
  return 0;
}

int cmd_check(const std::string& input, const std::vector<double>& eps, double t) {
  const FilteredComplex C = load_complex(input);
  std::vector<std::pair<double, double>> pairs;
  for (double e : eps) pairs.push_back({e, t});
  const auto cons = endpoint_conservation_check(C, pairs);
  if (!cons) throw InvariantViolation(cons.message);
  for (double e : eps) {
    const auto bound = intersection_bound_check(C, e);
    if (!bound) throw InvariantViolation(bound.message);
    std::cout << "eps " << text::format_real(e) << ": generators " << bound.generators << ", bars " << bound.bars
              << ", long bars " << bound.long_bars << '\n';
  }
  std::cout << "ok: " << C.size() << " generators, valid, endpoints conserved\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistence barcodes of filtered complexes, barcode entropy and integral-geometry checks", "wfbar"};
  app.require_subcommand(1);

  std::string in_a, in_b, output;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a filtered complex to its barcode");
  reduce_cmd->add_option("complex", in_a, "Complex file")->required();
  reduce_cmd->add_option("-o,--output", output, "Barcode file (default stdout)");

  auto* distance_cmd = app.add_subcommand("distance", "Bottleneck distance between two barcode files");
  distance_cmd->add_option("a", in_a, "First barcode")->required();
  distance_cmd->add_option("b", in_b, "Second barcode")->required();

  EntropyArgs ent;
  auto* entropy_cmd = app.add_subcommand("entropy", "Barcode entropy of a family listed in a manifest");
  entropy_cmd->add_option("manifest", ent.manifest, "Manifest file")->required();
  entropy_cmd->add_option("--eps", ent.eps, "Epsilon grid: comma list or lo:hi:n")->capture_default_str();
  entropy_cmd->add_option("--schedule", ent.schedule, "Truncation levels or scales: comma list or lo:hi:n");
  entropy_cmd->add_option("--profile", ent.profile, "Profile file; scales the spectrum through A_{sh}");
  entropy_cmd->add_option("--window", ent.window, "Regression window as a fraction of the schedule")
      ->capture_default_str();
  entropy_cmd->add_option("-o,--output", ent.output, "Entropy TSV (default stdout)");
  entropy_cmd->add_option("--counts", ent.counts, "Write the counts table here");
  entropy_cmd->add_flag("--positive", ent.positive, "Report the positive part (quotient above half the smallest positive action)");

  CroftonArgs cro;
  auto* crofton_cmd = app.add_subcommand("crofton", "Monte Carlo Crofton integral of a plane curve");
  crofton_cmd->add_option("--curve", cro.curve,
                          "circle|ellipse|segment|polygon|star|spiral|sine|limacon|lemniscate")
      ->capture_default_str();
  crofton_cmd->add_option("--param", cro.params, "Curve parameters")->delimiter(',');
  crofton_cmd->add_option("--table", cro.table, "Polyline table of 'x y' rows (overrides --curve)");
  crofton_cmd->add_flag("--closed", cro.closed, "Close the polyline table");
  crofton_cmd->add_option("--scale", cro.scale, "Scale factor")->capture_default_str();
  crofton_cmd->add_option("-n,--samples", cro.samples, "Number of random lines")->capture_default_str();
  crofton_cmd->add_option("--seed", cro.seed, "Random seed")->required();
  crofton_cmd->add_option("-o,--output", cro.output, "TSV output (default stdout)");

  TomographArgs tom;
  auto* tomograph_cmd = app.add_subcommand("tomograph", "Intersection census of a trigonometric tomograph");
  tomograph_cmd->add_option("--g-cos", tom.g_cos, "Cosine coefficients a_1,a_2,... of g")->delimiter(',');
  tomograph_cmd->add_option("--g-sin", tom.g_sin, "Sine coefficients b_1,b_2,... of g")->delimiter(',');
  tomograph_cmd->add_option("-d,--basis", tom.basis, "Basis size d")->capture_default_str();
  tomograph_cmd->add_option("-r,--radius", tom.radius, "Parameter ball radius")->capture_default_str();
  tomograph_cmd->add_option("-n,--samples", tom.samples, "Number of parameter samples")->capture_default_str();
  tomograph_cmd->add_option("--calibrate", tom.calibration_samples,
                            "Samples per probe for the crossing-density constant (0 = skip)");
  tomograph_cmd->add_option("--seed", tom.seed, "Random seed")->required();
  tomograph_cmd->add_option("-o,--output", tom.output, "TSV output (default stdout)");

  SpectrumArgs spec;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Generate a reference length spectrum");
  spectrum_cmd->add_option("kind", spec.kind, "torus|exp|schottky")
      ->required()
      ->check(CLI::IsMember({"torus", "exp", "schottky"}));
  spectrum_cmd->add_option("--tmax", spec.t_max, "Length cutoff (torus, exp)")->capture_default_str();
  spectrum_cmd->add_option("--rate", spec.h, "Growth rate h (exp)")->capture_default_str();
  spectrum_cmd->add_option("--p", spec.p, "Start point x,y (torus)")->delimiter(',');
  spectrum_cmd->add_option("--q", spec.q, "End point x,y (torus)")->delimiter(',');
  spectrum_cmd->add_option("--gen", spec.generators, "Generator a,b,c,d (schottky, repeatable)")->delimiter(',');
  spectrum_cmd->add_option("--hp", spec.hp, "Base point x,y in the upper half plane (schottky)")->delimiter(',');
  spectrum_cmd->add_option("--hq", spec.hq, "Orbit point x,y (schottky)")->delimiter(',');
  spectrum_cmd->add_option("--words", spec.word_length, "Maximal word length (schottky)")->capture_default_str();
  spectrum_cmd->add_option("--complex", spec.complex_model, "Emit a complex instead: trivial|planted");
  spectrum_cmd->add_option("--gap", spec.gap, "Gap distribution for planted complexes")->capture_default_str();
  spectrum_cmd->add_option("--seed", spec.seed, "Seed for planted gaps")->capture_default_str();
  spectrum_cmd->add_option("--zero", spec.zero, "Extra generators at action 0")->capture_default_str();
  spectrum_cmd->add_option("-o,--output", spec.output, "Output file (default stdout)");

  double tau = 0.0;
  std::string low_out, quotient_out;
  auto* split_cmd = app.add_subcommand("split", "Split a complex at an action threshold");
  split_cmd->add_option("complex", in_a, "Complex file")->required();
  split_cmd->add_option("--tau", tau, "Threshold (must not equal any action)")->required();
  split_cmd->add_option("--low", low_out, "Subcomplex output")->required();
  split_cmd->add_option("--quotient", quotient_out, "Quotient output")->required();

  std::vector<double> check_eps{0.1};
  double check_t = 1.0;
  auto* check_cmd = app.add_subcommand("check", "Validate a complex and check endpoint bookkeeping");
  check_cmd->add_option("complex", in_a, "Complex file")->required();
  check_cmd->add_option("--eps", check_eps, "Bar-length thresholds")->delimiter(',')->capture_default_str();
  check_cmd->add_option("--t", check_t, "Census level")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(in_a, output);
    if (*distance_cmd) return cmd_distance(in_a, in_b);
    if (*entropy_cmd) return cmd_entropy(ent);
    if (*crofton_cmd) return cmd_crofton(cro);
    if (*tomograph_cmd) return cmd_tomograph(tom);
    if (*spectrum_cmd) return cmd_spectrum(spec);
    if (*split_cmd) return cmd_split(in_a, tau, low_out, quotient_out);
    if (*check_cmd) return cmd_check(in_a, check_eps, check_t);
  } catch (const ParseError& e) {
    std::cerr << "wfbar: parse error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "wfbar: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "wfbar: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "wfbar: invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const MemberFailure& e) {
    std::cerr << "wfbar: member failure: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "wfbar: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
