#include "wcolab/experiment.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wcolab/weight_iterates.hpp"

namespace wcolab {

using nlohmann::json;

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

double parse_real(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("cannot parse number '" + s + "'");
  return v;
}

std::size_t parse_count(const std::string& s) {
  const double v = parse_real(s);
  if (v < 0 || std::floor(v) != v) throw std::invalid_argument("expected a nonnegative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

json complex_to_json(Complex c) {
  if (c.imag() == 0.0) return c.real();
  return json::array({c.real(), c.imag()});
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  throw std::invalid_argument("expected a complex number, got " + j.dump());
}

json complex_list(const std::vector<Complex>& v) {
  json arr = json::array();
  for (Complex c : v) arr.push_back(complex_to_json(c));
  return arr;
}

std::vector<Complex> complex_list_from(const json& j) {
  std::vector<Complex> v;
  for (const auto& x : j) v.push_back(complex_from_json(x));
  return v;
}

json space_to_json(const SpaceSpec& s) {
  json j;
  switch (s.kind) {
    case SpaceKind::hardy: j = {{"kind", "hardy"}, {"p", s.p}}; break;
    case SpaceKind::bergman: j = {{"kind", "bergman"}, {"p", s.p}, {"beta", s.beta}}; break;
    case SpaceKind::sup: j = {{"kind", "sup"}, {"side", s.side == SupSide::lower ? "lower" : "upper"}}; break;
  }
  j["angular_grid"] = s.angular_grid;
  j["radial_order"] = s.radial_order;
  return j;
}

SpaceSpec space_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  SpaceSpec s;
  if (kind == "hardy") {
    s = SpaceSpec::hardy(j.at("p").get<double>());
  } else if (kind == "bergman") {
    s = SpaceSpec::bergman(j.at("p").get<double>(), j.at("beta").get<double>());
  } else if (kind == "sup") {
    s = SpaceSpec::sup(j.value("side", std::string("upper")) == "lower" ? SupSide::lower : SupSide::upper);
  } else {
    throw std::invalid_argument("unknown space kind '" + kind + "'");
  }
  s.angular_grid = j.value("angular_grid", std::size_t{0});
  s.radial_order = j.value("radial_order", std::size_t{128});
  return s;
}

json candidate_to_json(const CandidateSpec& c) {
  switch (c.kind) {
    case CandidateSpec::Kind::eigen: return {{"kind", "eigen"}, {"s", complex_to_json(c.s)}, {"k", c.monomial}};
    case CandidateSpec::Kind::monomial: return {{"kind", "monomial"}, {"k", c.monomial}};
    case CandidateSpec::Kind::polynomial: return {{"kind", "polynomial"}, {"coeffs", complex_list(c.coeffs)}};
  }
  return {};
}

CandidateSpec candidate_from_json(const json& j) {
  CandidateSpec c;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "eigen") {
    c.kind = CandidateSpec::Kind::eigen;
    c.s = complex_from_json(j.at("s"));
    c.monomial = j.value("k", std::size_t{0});
  } else if (kind == "monomial") {
    c.kind = CandidateSpec::Kind::monomial;
    c.monomial = j.at("k").get<std::size_t>();
  } else if (kind == "polynomial") {
    c.kind = CandidateSpec::Kind::polynomial;
    c.coeffs = complex_list_from(j.at("coeffs"));
  } else {
    throw std::invalid_argument("unknown candidate kind '" + kind + "'");
  }
  return c;
}

json config_json(const ExperimentConfig& cfg) {
  json j;
  j["schema_version"] = cfg.schema_version;
  j["command"] = cfg.command;
  j["preset"] = cfg.preset;
  j["weight"] = complex_list(cfg.weight);
  if (cfg.phi_a)
    j["phi"] = {{"kind", "affine-a"}, {"a", *cfg.phi_a}};
  else
    j["phi"] = {{"kind", "polynomial"}, {"coeffs", complex_list(cfg.phi_poly)}};
  j["space"] = space_to_json(cfg.space);
  j["degree"] = cfg.degree;
  j["horizon"] = cfg.horizon;
  j["cap"] = cfg.cap ? json(*cfg.cap) : json(nullptr);
  j["epsilon"] = cfg.epsilon;
  j["G"] = cfg.growth;
  json cands = json::array();
  for (const auto& c : cfg.candidates) cands.push_back(candidate_to_json(c));
  j["candidates"] = cands;
  j["eigen_s"] = complex_to_json(cfg.eigen_s);
  j["sweep"] = {{"lambda_grid", complex_list(cfg.lambda_grid)},
                {"a_grid", cfg.a_grid},
                {"p_grid", cfg.p_grid},
                {"beta_grid", cfg.beta_grid},
                {"threads", cfg.threads}};
  j["output"] = {{"path", cfg.out}, {"format", cfg.format}};
  return j;
}

json sequence_summary(const NormSequence& s) {
  return {{"label", s.label},
          {"space", s.space.name()},
          {"provenance", to_string(s.provenance)},
          {"converged", s.converged},
          {"length", s.size()}};
}

void check_eigen_membership(const ExperimentConfig& cfg, const SpaceSpec& orbit_space) {
  for (const auto& c : cfg.candidates) {
    if (c.kind != CandidateSpec::Kind::eigen) continue;
    if (!eigenfunction_in_space(c.s, orbit_space))
      throw std::invalid_argument("candidate (1-z)^s with Re s = " + format_double(c.s.real()) +
                                  " is not in " + orbit_space.name());
  }
}

}  // namespace

std::string format_double(double x) { return fmt::format("{}", x); }

std::string config_to_json(const ExperimentConfig& cfg) { return config_json(cfg).dump(2); }

ExperimentConfig config_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    ExperimentConfig cfg;
    cfg.schema_version = j.at("schema_version").get<int>();
    if (cfg.schema_version != kSchemaVersion)
      throw std::invalid_argument("unsupported config schema_version " + std::to_string(cfg.schema_version));
    cfg.command = j.value("command", std::string{});
    cfg.preset = j.value("preset", std::string{});
    if (j.contains("weight")) cfg.weight = complex_list_from(j["weight"]);
    if (j.contains("phi")) {
      const auto& phi = j["phi"];
      if (phi.at("kind").get<std::string>() == "affine-a") {
        cfg.phi_a = phi.at("a").get<double>();
        cfg.phi_poly.clear();
      } else {
        cfg.phi_a.reset();
        cfg.phi_poly = complex_list_from(phi.at("coeffs"));
      }
    }
    if (j.contains("space")) cfg.space = space_from_json(j["space"]);
    cfg.degree = j.value("degree", cfg.degree);
    cfg.horizon = j.value("horizon", cfg.horizon);
    if (j.contains("cap") && !j["cap"].is_null()) cfg.cap = j["cap"].get<std::size_t>();
    cfg.epsilon = j.value("epsilon", cfg.epsilon);
    cfg.growth = j.value("G", cfg.growth);
    if (j.contains("candidates"))
      for (const auto& c : j["candidates"]) cfg.candidates.push_back(candidate_from_json(c));
    if (j.contains("eigen_s")) cfg.eigen_s = complex_from_json(j["eigen_s"]);
    if (j.contains("sweep")) {
      const auto& s = j["sweep"];
      if (s.contains("lambda_grid")) cfg.lambda_grid = complex_list_from(s["lambda_grid"]);
      cfg.a_grid = s.value("a_grid", cfg.a_grid);
      cfg.p_grid = s.value("p_grid", cfg.p_grid);
      cfg.beta_grid = s.value("beta_grid", cfg.beta_grid);
      cfg.threads = s.value("threads", cfg.threads);
    }
    if (j.contains("output")) {
      cfg.out = j["output"].value("path", cfg.out);
      cfg.format = j["output"].value("format", cfg.format);
    }
    return cfg;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed config: ") + e.what());
  }
}

Complex parse_complex(std::string_view text) {
  std::string s = strip(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split_at = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split_at == std::string::npos) return {0.0, imag_part(s)};
  return {parse_real(s.substr(0, split_at)), imag_part(s.substr(split_at))};
}

std::vector<Complex> parse_coefficients(std::string_view text) {
  std::vector<Complex> v;
  for (const auto& part : split(strip(text), ',')) v.push_back(parse_complex(part));
  return v;
}

std::vector<Complex> parse_weight(std::string_view text) {
  const std::string s = strip(text);
  if (s == "z") return {0.0, 1.0};
  const auto star = s.find('*');
  if (star != std::string::npos) {
    if (s.substr(star + 1) != "z")
      throw std::invalid_argument("weight literal must have the form 'lambda*z', got '" + s + "'");
    return {0.0, parse_complex(s.substr(0, star))};
  }
  return parse_coefficients(s);
}

std::vector<CandidateSpec> parse_candidates(std::string_view text) {
  std::vector<CandidateSpec> out;
  const std::string s = strip(text);
  if (s.empty()) return out;
  for (const auto& item : split(s, ',')) {
    CandidateSpec c;
    bool has_s = false, has_k = false, has_poly = false;
    for (const auto& field : split(item, ':')) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("candidate field '" + field + "' needs key=value");
      const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
      if (key == "s") {
        c.s = parse_complex(value);
        has_s = true;
      } else if (key == "k") {
        c.monomial = parse_count(value);
        has_k = true;
      } else if (key == "poly") {
        for (const auto& p : split(value, '|')) c.coeffs.push_back(parse_complex(p));
        has_poly = true;
      } else {
        throw std::invalid_argument("unknown candidate key '" + key + "'");
      }
    }
    if (has_poly && (has_s || has_k)) throw std::invalid_argument("candidate '" + item + "' mixes poly with s/k");
    if (has_poly)
      c.kind = CandidateSpec::Kind::polynomial;
    else if (has_s)
      c.kind = CandidateSpec::Kind::eigen;
    else if (has_k)
      c.kind = CandidateSpec::Kind::monomial;
    else
      throw std::invalid_argument("empty candidate");
    out.push_back(std::move(c));
  }
  return out;
}

SpaceSpec parse_space(std::string_view name, double p, double beta) {
  const std::string s = strip(name);
  if (s == "hinf") return SpaceSpec::sup(SupSide::upper);
  if (s == "hp") return SpaceSpec::hardy(p);
  if (s == "bergman") return SpaceSpec::bergman(p, beta);
  if (s == "a2") return SpaceSpec::bergman(2.0, beta);
  if (s.size() > 1 && s[0] == 'h') return SpaceSpec::hardy(parse_real(s.substr(1)));
  throw std::invalid_argument("unknown space '" + s + "' (expected h2, h1, hp, bergman, a2, hinf)");
}

std::vector<double> parse_grid(std::string_view text) {
  const std::string s = strip(text);
  std::vector<double> out;
  if (s.empty()) return out;
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw std::invalid_argument("grid range must be lo:hi:count, got '" + s + "'");
    const double lo = parse_real(parts[0]), hi = parse_real(parts[1]);
    const std::size_t count = parse_count(parts[2]);
    for (std::size_t i = 0; i < count; ++i)
      out.push_back(count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    return out;
  }
  for (const auto& part : split(s, ',')) out.push_back(parse_real(part));
  return out;
}

std::vector<Complex> parse_complex_grid(std::string_view text) {
  const std::string s = strip(text);
  if (s.find(':') != std::string::npos) {
    std::vector<Complex> out;
    for (double x : parse_grid(s)) out.emplace_back(x, 0.0);
    return out;
  }
  if (s.empty()) return {};
  return parse_coefficients(s);
}

SelfMapSymbol build_symbol(const ExperimentConfig& cfg) {
  SelfMapSymbol phi = cfg.phi_a ? SelfMapSymbol::phi_a(*cfg.phi_a)
                                : SelfMapSymbol::polynomial(AnalyticPoly(cfg.phi_poly));
  if (!validate_self_map(phi)) {
    std::string what = cfg.phi_a ? "phi_a with a = " + format_double(*cfg.phi_a) : std::string("polynomial phi");
    throw std::invalid_argument("self-map validation failed for " + what +
                                ": max |phi| on the boundary grid exceeds 1 or |phi(0)| >= 1");
  }
  return phi;
}

WeightedCompOp build_operator(const ExperimentConfig& cfg) {
  if (cfg.weight.empty()) throw std::invalid_argument("weight has no coefficients");
  return WeightedCompOp(WeightSymbol(AnalyticPoly(cfg.weight)), build_symbol(cfg));
}

OrbitVector build_candidate(const CandidateSpec& c, std::size_t degree) {
  switch (c.kind) {
    case CandidateSpec::Kind::eigen: return EigenCandidate{c.s, degree, c.monomial};
    case CandidateSpec::Kind::monomial: return AnalyticPoly::monomial(c.monomial);
    case CandidateSpec::Kind::polynomial: return AnalyticPoly(c.coeffs);
  }
  return AnalyticPoly{1.0};
}

namespace {

void check_run(const ExperimentConfig& cfg) {
  if (cfg.horizon < 1) throw std::invalid_argument("horizon must be >= 1");
}

WeightIterateCache build_cache(const WeightedCompOp& op, const ExperimentConfig& cfg) {
  return WeightIterateCache(op.w, op.phi, cfg.horizon, cfg.cap);
}

}  // namespace

NormSequence run_weights(const ExperimentConfig& cfg) {
  check_run(cfg);
  const WeightedCompOp op = build_operator(cfg);
  return weight_norm_sequence(build_cache(op, cfg), cfg.space);
}

NormSequence run_orbit(const ExperimentConfig& cfg) {
  check_run(cfg);
  if (cfg.candidates.size() != 1) throw std::invalid_argument("orbit needs exactly one candidate");
  const WeightedCompOp op = build_operator(cfg);
  check_eigen_membership(cfg, cfg.space);
  return orbit_norm_sequence(op, build_candidate(cfg.candidates[0], cfg.degree), cfg.space, build_cache(op, cfg));
}

ClassifyResult run_classify(const ExperimentConfig& cfg) {
  check_run(cfg);
  const WeightedCompOp op = build_operator(cfg);
  SpaceSpec weight_space = cfg.space, orbit_space = cfg.space;
  if (cfg.space.kind == SpaceKind::sup) {
    weight_space.side = SupSide::upper;
    orbit_space.side = SupSide::lower;
  }
  check_eigen_membership(cfg, orbit_space);
  const WeightIterateCache cache = build_cache(op, cfg);
  ClassifyResult r;
  r.weight_seq = weight_norm_sequence(cache, weight_space);
  for (const auto& c : cfg.candidates)
    r.orbit_seqs.push_back(orbit_norm_sequence(op, build_candidate(c, cfg.degree), orbit_space, cache));
  r.li_yorke = certify_li_yorke(r.weight_seq, r.orbit_seqs, cfg.epsilon, cfg.growth);
  r.mean_li_yorke = certify_mean_li_yorke(r.weight_seq, r.orbit_seqs, cfg.epsilon, cfg.growth);
  return r;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
  std::vector<ExperimentConfig> cells;
  const bool symbol_grid = !cfg.lambda_grid.empty() || !cfg.a_grid.empty();
  if (symbol_grid) {
    for (Complex lambda : cfg.lambda_grid) {
      for (double a : cfg.a_grid) {
        ExperimentConfig c = cfg;
        c.weight = {0.0, lambda};
        c.phi_a = a;
        cells.push_back(std::move(c));
      }
    }
  } else {
    for (double p : cfg.p_grid) {
      if (cfg.beta_grid.empty()) {
        ExperimentConfig c = cfg;
        c.space = SpaceSpec::hardy(p);
        cells.push_back(std::move(c));
      }
      for (double beta : cfg.beta_grid) {
        ExperimentConfig c = cfg;
        c.space = SpaceSpec::bergman(p, beta);
        cells.push_back(std::move(c));
      }
    }
  }
  if (cells.size() > 10000) throw std::invalid_argument("sweep grid exceeds 10^4 cells");
  for (const auto& c : cells) build_symbol(c);

  std::vector<SweepRow> rows(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        const ClassifyResult r = run_classify(cells[i]);
        SweepRow& row = rows[i];
        row.lambda = cells[i].weight.size() > 1 ? cells[i].weight[1] : Complex{0.0};
        row.a = cells[i].phi_a.value_or(std::nan(""));
        row.space = cells[i].space;
        row.li_yorke = r.li_yorke;
        row.mean_li_yorke = r.mean_li_yorke;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(cells.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

UnweightedPreset run_unweighted_preset(double a, const SpaceSpec& space, std::size_t horizon,
                                       std::size_t decay_degree, std::size_t growth_degree) {
  SelfMapSymbol phi = SelfMapSymbol::phi_a(a);
  if (!(a > 0.0 && a < 1.0) || !validate_self_map(phi))
    throw std::invalid_argument("self-map validation failed for phi_a with a = " + format_double(a));
  if (horizon < 16) throw std::invalid_argument("unweighted preset needs horizon >= 16 for the growth fit");
  const WeightedCompOp op(WeightSymbol::one(), phi);
  const WeightIterateCache cache(op.w, op.phi, horizon);

  UnweightedPreset out;
  out.a = a;
  for (std::size_t k = 0; k <= 2; ++k) {
    out.decay.push_back(orbit_norm_sequence(op, EigenCandidate{0.25, decay_degree, k}, space, cache));
    std::vector<double> bound;
    for (std::size_t n = 1; n <= horizon; ++n) {
      const double an = std::pow(a, static_cast<double>(n));
      bound.push_back(std::pow(an, 0.25) * std::pow(2.0, 0.25) * std::pow(an + 1.0, static_cast<double>(k)));
    }
    out.decay_bound.push_back(std::move(bound));
  }
  out.growth = orbit_norm_sequence(op, EigenCandidate{-1.0 / 12.0, growth_degree, 0}, space, cache);
  out.fit_first = horizon / 2 + 1;
  out.fit_last = horizon;
  out.growth_rate = growth_rate_fit(out.growth.values, out.fit_first, out.fit_last);
  out.weight_seq = weight_norm_sequence(cache, space);
  return out;
}

ExperimentConfig weighted_chaotic_config() {
  ExperimentConfig cfg;
  cfg.command = "classify";
  cfg.preset = "weighted-chaotic";
  cfg.weight = {0.0, 0.9};
  cfg.phi_a = 0.25;
  cfg.space = SpaceSpec::hardy(2.0);
  cfg.degree = 1024;
  cfg.horizon = 500;
  cfg.epsilon = 1e-10;
  cfg.growth = 1e3;
  cfg.candidates = {CandidateSpec{CandidateSpec::Kind::eigen, -0.4, 0, {}}};
  return cfg;
}

void write_sequence_csv(std::ostream& out, const NormSequence& seq) {
  const SequenceStats st = sequence_stats(seq);
  out << "n,norm,cesaro_mean,running_min,running_max\n";
  for (std::size_t i = 0; i < seq.size(); ++i)
    out << (i + 1) << ',' << format_double(seq.values[i]) << ',' << format_double(st.cesaro[i]) << ','
        << format_double(st.running_min[i]) << ',' << format_double(st.running_max[i]) << '\n';
}

namespace {

json verdict_json(const ChaosVerdict& v, const std::vector<NormSequence>& orbits) {
  json j;
  j["kind"] = to_string(v.kind);
  j["citation"] = v.citation;
  j["branch"] = v.branch;
  if (v.decay)
    j["decay_witness"] = {{"n", v.decay->n}, {"value", v.decay->value}, {"series", to_string(v.decay->series)}};
  else
    j["decay_witness"] = nullptr;
  if (v.growth) {
    json g = {{"channel", to_string(v.growth->channel)},
              {"n", v.growth->n},
              {"value", v.growth->value},
              {"baseline", v.growth->baseline},
              {"rate", v.growth->rate ? json(*v.growth->rate) : json(nullptr)},
              {"series", to_string(v.growth->series)}};
    if (v.growth->channel == GrowthChannel::orbit) {
      g["orbit_index"] = v.growth->orbit_index;
      if (v.growth->orbit_index < orbits.size()) g["candidate"] = orbits[v.growth->orbit_index].label;
    }
    j["growth_witness"] = g;
  } else {
    j["growth_witness"] = nullptr;
  }
  j["thresholds"] = {{"epsilon", v.thresholds.epsilon}, {"G", v.thresholds.growth}, {"horizon", v.thresholds.horizon}};
  j["decay_provenance"] = to_string(v.decay_provenance);
  return j;
}

}  // namespace

std::string verdict_to_json(const ChaosVerdict& v, const std::vector<NormSequence>& orbits) {
  return verdict_json(v, orbits).dump(2);
}

std::string classify_to_json(const ClassifyResult& r, const ExperimentConfig& cfg) {
  json j = verdict_json(r.li_yorke, r.orbit_seqs);
  j["schema_version"] = kSchemaVersion;
  j["mean_li_yorke"] = verdict_json(r.mean_li_yorke, r.orbit_seqs);
  json orbits = json::array();
  for (const auto& o : r.orbit_seqs) orbits.push_back(sequence_summary(o));
  j["sequences"] = {{"weight", sequence_summary(r.weight_seq)}, {"orbits", orbits}};
  j["config"] = config_json(cfg);
  return j.dump(2);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "lambda_re,lambda_im,a,space,kind,mean_kind,decay_n,growth_n,growth_channel,growth_rate,epsilon,G,horizon\n";
  for (const auto& r : rows) {
    const auto& v = r.li_yorke;
    out << format_double(r.lambda.real()) << ',' << format_double(r.lambda.imag()) << ',' << format_double(r.a) << ','
        << r.space.name() << ',' << to_string(v.kind) << ',' << to_string(r.mean_li_yorke.kind) << ','
        << (v.decay ? std::to_string(v.decay->n) : "") << ',' << (v.growth ? std::to_string(v.growth->n) : "")
        << ',' << (v.growth ? to_string(v.growth->channel) : "") << ','
        << (v.growth && v.growth->rate ? format_double(*v.growth->rate) : "") << ','
        << format_double(v.thresholds.epsilon) << ',' << format_double(v.thresholds.growth) << ','
        << v.thresholds.horizon << '\n';
  }
}

std::string unweighted_to_json(const UnweightedPreset& p) {
  json decay = json::array();
  for (std::size_t k = 0; k < p.decay.size(); ++k) {
    double worst = 0.0;
    for (std::size_t i = 0; i < p.decay[k].size(); ++i)
      worst = std::max(worst, p.decay[k].values[i] / p.decay_bound[k][i]);
    decay.push_back({{"k", k},
                     {"candidate", p.decay[k].label},
                     {"final", p.decay[k].values.back()},
                     {"max_ratio_to_bound", worst},
                     {"provenance", to_string(p.decay[k].provenance)}});
  }
  const SequenceStats ws = sequence_stats(p.weight_seq);
  json j = {{"schema_version", kSchemaVersion},
            {"preset", "unweighted"},
            {"a", p.a},
            {"space", p.weight_seq.space.name()},
            {"horizon", p.weight_seq.size()},
            {"decay", decay},
            {"growth",
             {{"candidate", p.growth.label},
              {"fit_window", {p.fit_first, p.fit_last}},
              {"rate", p.growth_rate},
              {"expected_rate", -std::log(p.a) / 12.0}}},
            {"weight_norms", {{"min", ws.min()}, {"max", ws.max()}}}};
  return j.dump(2);
}

void write_unweighted_decay_csv(std::ostream& out, const UnweightedPreset& p) {
  out << "n";
  for (std::size_t k = 0; k < p.decay.size(); ++k) out << ",norm_k" << k << ",bound_k" << k;
  out << '\n';
  const std::size_t horizon = p.decay.empty() ? 0 : p.decay[0].size();
  for (std::size_t i = 0; i < horizon; ++i) {
    out << (i + 1);
    for (std::size_t k = 0; k < p.decay.size(); ++k)
      out << ',' << format_double(p.decay[k].values[i]) << ',' << format_double(p.decay_bound[k][i]);
    out << '\n';
  }
}

}  // namespace wcolab
