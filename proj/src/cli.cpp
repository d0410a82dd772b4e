#include "rpf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "rpf/json_io.hpp"
#include "rpf/oracle.hpp"
#include "rpf/pak_stanley.hpp"
#include "rpf/render.hpp"

namespace rpf {

namespace {

using nlohmann::json;

WeylPoint parse_point(const std::string& text, int m) {
  std::string t = text;
  if (!t.empty() && (t.front() == '{' || t.front() == '[')) {
    json j = json::parse(t);
    if (j.is_array()) return make_weyl_point(m, j.get<std::vector<long long>>(), 1);
    return j.get<WeylPoint>();
  }
  // csv numerators with optional "/den" suffix
  long long den = 1;
  size_t slash = t.find('/');
  if (slash != std::string::npos) {
    den = std::stoll(t.substr(slash + 1));
    t = t.substr(0, slash);
  }
  std::vector<long long> num;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) num.push_back(std::stoll(item));
  return make_weyl_point(m, std::move(num), den);
}

struct Output {
  std::string format = "text";
  std::string out_path;

  void emit(std::ostream& fallback, const std::string& text) const {
    if (out_path.empty()) {
      fallback << text;
      if (!text.empty() && text.back() != '\n') fallback << '\n';
      return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << text;
  }
};

long long resolve_budget(long long flag, int m, int n) {
  if (flag > 0) return flag;
  for (const char* var : {"RPF_BUDGET", "RPL_BUDGET"}) {
    if (const char* env = std::getenv(var)) {
      long long v = std::atoll(env);
      if (v > 0) return v;
    }
  }
  return default_budget(m, n);
}

std::string orbit_text(const OrbitReport& r) {
  std::ostringstream ss;
  ss << "preperiod " << r.preperiod << "\n";
  if (r.period)
    ss << "period " << *r.period << "\n";
  else
    ss << "period not detected\n";
  ss << "terminal num=[";
  for (size_t i = 0; i < r.terminal.num.size(); ++i)
    ss << (i ? "," : "") << r.terminal.num[i];
  ss << "] den=" << r.terminal.den << "\n";
  ss << "steps " << r.steps_used;
  return ss.str();
}

std::string skeleton_text(const Skeleton& sk) {
  std::ostringstream ss;
  for (size_t i = 0; i < sk.size(); ++i) {
    if (i) ss << " ";
    ss << sk[i].value << (sk[i].kind == SkeletonKind::generator ? "g" : "c");
  }
  return ss.str();
}

std::string window_text(const AffineWindow& w) {
  std::ostringstream ss;
  ss << "[";
  for (size_t i = 0; i < w.window.size(); ++i) ss << (i ? "," : "") << w.window[i];
  ss << "]";
  return ss.str();
}

std::string invert_table(const ParkingWord& p, const SpInvertResult& r) {
  std::ostringstream ss;
  ss << "  i  p(i)  S_i" << std::string(3 * p.m, ' ') << "V(i)\n";
  std::vector<long long> state(p.m);
  for (int i = 0; i < p.m; ++i) state[i] = i;
  for (size_t i = 0; i < r.V.size(); ++i) {
    std::ostringstream row;
    row << "(";
    for (int k = 0; k < p.m; ++k) row << (k ? "," : "") << state[k];
    row << ")";
    ss << std::setw(3) << i << "  " << std::setw(4) << p.letters[i % p.n()] << "  "
       << std::setw(3 * p.m + 4) << std::left << row.str() << std::right << r.V[i] << "\n";
    state = act_letter_unbalanced(state, p.letters[i % p.n()], p.m).first;
  }
  return ss.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const CLI::ParseError&) {
    return 2;  // handled inside dispatch; defensive
  } catch (const budget_error& e) {
    err << "budget: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rational parking function toolkit"};
  app.require_subcommand(1);

  int m = 0, n = 0, k = 0;
  long long budget_flag = 0;
  std::uint64_t seed = 1;
  std::string word_text, set_text, set2_text, window_text_arg, point_text, suite_name;
  bool want_table = false;
  Output output;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", output.format, "text|json|svg")
        ->check(CLI::IsMember({"text", "json", "svg"}));
    cmd->add_option("--out", output.out_path, "write output to a file");
  };

  CLI::App* enum_pf = app.add_subcommand("enumerate-pf", "list all parking words");
  enum_pf->add_option("--m", m)->required();
  enum_pf->add_option("--n", n)->required();
  add_common(enum_pf);

  CLI::App* enum_dyck = app.add_subcommand("enumerate-dyck", "list all monotone parking words");
  enum_dyck->add_option("--m", m)->required();
  enum_dyck->add_option("--n", n)->required();
  add_common(enum_dyck);

  CLI::App* check_pf = app.add_subcommand("check-pf", "test the parking condition");
  check_pf->add_option("--m", m)->required();
  check_pf->add_option("--n", n);
  check_pf->add_option("--word", word_text)->required();
  add_common(check_pf);

  CLI::App* act = app.add_subcommand("act", "apply a word to a chamber point");
  act->add_option("--m", m)->required();
  act->add_option("--n", n);
  act->add_option("--word", word_text)->required();
  act->add_option("--point", point_text, "start point, default fundamental centroid");
  add_common(act);

  CLI::App* fixpoint = app.add_subcommand("fixpoint", "iterate a word to its fixed point");
  fixpoint->add_option("--m", m)->required();
  fixpoint->add_option("--n", n);
  fixpoint->add_option("--word", word_text)->required();
  fixpoint->add_option("--budget", budget_flag);
  add_common(fixpoint);

  CLI::App* orbit = app.add_subcommand("orbit", "orbit analysis from a given point");
  orbit->add_option("--m", m)->required();
  orbit->add_option("--n", n);
  orbit->add_option("--word", word_text)->required();
  orbit->add_option("--point", point_text)->required();
  orbit->add_option("--budget", budget_flag);
  add_common(orbit);

  CLI::App* invset = app.add_subcommand("invset", "invariant set operations");
  invset->require_subcommand(1);
  CLI::App* iv_act = invset->add_subcommand("act", "apply a word to a set");
  CLI::App* iv_gen = invset->add_subcommand("generators", "k-generators of a set");
  CLI::App* iv_skel = invset->add_subcommand("skeleton", "merged generator/cogenerator list");
  CLI::App* iv_mono = invset->add_subcommand("monotone", "associated monotone word");
  CLI::App* iv_gamma = invset->add_subcommand("gamma", "skeleton path of a set");
  CLI::App* iv_equiv = invset->add_subcommand("equiv", "same skeleton path test");
  CLI::App* iv_enum = invset->add_subcommand("enumerate", "all 0-normalized sets");
  CLI::App* iv_dec = invset->add_subcommand("decompose", "split by residue class");
  for (CLI::App* cmd : {iv_act, iv_gen, iv_skel, iv_mono, iv_gamma, iv_equiv, iv_enum, iv_dec}) {
    cmd->add_option("--m", m)->required();
    cmd->add_option("--n", n);
    add_common(cmd);
  }
  for (CLI::App* cmd : {iv_act, iv_gen, iv_skel, iv_mono, iv_gamma, iv_equiv, iv_dec})
    cmd->add_option("--set", set_text)->required();
  iv_act->add_option("--word", word_text)->required();
  iv_gen->add_option("--k", k, "generator order, defaults to m");
  iv_equiv->add_option("--set2", set2_text)->required();

  CLI::App* sp = app.add_subcommand("sp", "labeling map and its inverses");
  sp->require_subcommand(1);
  CLI::App* sp_fwd = sp->add_subcommand("forward", "word of a window");
  sp_fwd->add_option("--m", m)->required();
  sp_fwd->add_option("--window", window_text_arg)->required();
  add_common(sp_fwd);
  CLI::App* sp_inv = sp->add_subcommand("invert", "window of a parking word");
  sp_inv->add_option("--m", m)->required();
  sp_inv->add_option("--n", n);
  sp_inv->add_option("--word", word_text)->required();
  sp_inv->add_option("--budget", budget_flag);
  sp_inv->add_flag("--table", want_table, "print the step table");
  add_common(sp_inv);

  CLI::App* sommers = app.add_subcommand("sommers", "windows of the bounded region");
  sommers->add_option("--m", m)->required();
  sommers->add_option("--n", n)->required();
  add_common(sommers);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_name, "suite name")->required();
  verify->add_option("--m", m)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--seed", seed);
  verify->add_option("--budget", budget_flag);
  add_common(verify);

  CLI::App* render = app.add_subcommand("render", "svg figures");
  render->require_subcommand(1);
  CLI::App* r_dyck = render->add_subcommand("dyck", "grid, diagonal and path");
  r_dyck->add_option("--m", m)->required();
  r_dyck->add_option("--n", n);
  r_dyck->add_option("--word", word_text)->required();
  add_common(r_dyck);
  CLI::App* r_lattice = render->add_subcommand("lattice", "periodic labeled boxes");
  r_lattice->add_option("--m", m)->required();
  r_lattice->add_option("--n", n)->required();
  r_lattice->add_option("--set", set_text)->required();
  add_common(r_lattice);
  CLI::App* r_orbit = render->add_subcommand("orbit", "rank-3 orbit walk");
  r_orbit->add_option("--m", m)->required();
  r_orbit->add_option("--n", n);
  r_orbit->add_option("--word", word_text)->required();
  r_orbit->add_option("--point", point_text);
  r_orbit->add_option("--budget", budget_flag);
  add_common(r_orbit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  auto need_word = [&]() {
    ParkingWord w = parse_word(word_text, m);
    if (n > 0 && w.n() != n)
      throw std::invalid_argument("word has " + std::to_string(w.n()) +
                                  " letters, expected " + std::to_string(n));
    return w;
  };

  if (enum_pf->parsed()) {
    auto words = enumerate_parking_words(m, n);
    if (output.format == "json") {
      output.emit(out, json(words).dump());
    } else {
      std::ostringstream ss;
      for (const auto& w : words) ss << render_word(w) << "\n";
      ss << "total " << words.size();
      output.emit(out, ss.str());
    }
    return 0;
  }

  if (enum_dyck->parsed()) {
    auto paths = enumerate_dyck_words(m, n);
    if (output.format == "json") {
      output.emit(out, json(paths).dump());
    } else {
      std::ostringstream ss;
      for (const auto& d : paths) ss << render_path(d) << "\n";
      ss << "total " << paths.size();
      output.emit(out, ss.str());
    }
    return 0;
  }

  if (check_pf->parsed()) {
    bool ok = is_parking_word(need_word());
    if (output.format == "json")
      output.emit(out, json{{"parking", ok}}.dump());
    else
      output.emit(out, ok ? "true" : "false");
    return ok ? 0 : 1;
  }

  if (act->parsed()) {
    ParkingWord w = need_word();
    WeylPoint x = point_text.empty() ? fundamental_centroid(m) : parse_point(point_text, m);
    auto [result, trace] = act_word(x, w);
    if (output.format == "json") {
      output.emit(out, json{{"point", result}, {"sigma", trace.sigma}, {"trace", trace}}.dump());
    } else {
      std::ostringstream ss;
      ss << "point num=[";
      for (size_t i = 0; i < result.num.size(); ++i) ss << (i ? "," : "") << result.num[i];
      ss << "] den=" << result.den << "\nsigma [";
      for (size_t i = 0; i < trace.sigma.size(); ++i) ss << (i ? "," : "") << trace.sigma[i];
      ss << "]";
      output.emit(out, ss.str());
    }
    return 0;
  }

  if (fixpoint->parsed()) {
    ParkingWord w = need_word();
    OrbitReport r = find_fixed_point(w, resolve_budget(budget_flag, m, w.n()));
    bool found = r.period && *r.period == 1;
    if (output.format == "json") {
      json j = json{{"found", found}, {"report", r}};
      if (found) j["point"] = r.terminal;
      output.emit(out, j.dump());
    } else {
      output.emit(out, (found ? "fixed point found\n" : "no fixed point\n") + orbit_text(r));
    }
    if (!r.period) return 3;
    return found ? 0 : 1;
  }

  if (orbit->parsed()) {
    ParkingWord w = need_word();
    WeylPoint x = parse_point(point_text, m);
    OrbitReport r = orbit_analysis(w, x, resolve_budget(budget_flag, m, w.n()));
    if (output.format == "json")
      output.emit(out, json(r).dump());
    else
      output.emit(out, orbit_text(r));
    return r.period ? 0 : 3;
  }

  if (invset->parsed()) {
    if (iv_enum->parsed()) {
      auto sets = enumerate_invariant_sets(m, n);
      if (output.format == "json") {
        output.emit(out, json(sets).dump());
      } else {
        std::ostringstream ss;
        for (const auto& s : sets) ss << render_set(s) << "\n";
        ss << "total " << sets.size();
        output.emit(out, ss.str());
      }
      return 0;
    }
    InvariantSet s = parse_set(set_text);
    if (iv_act->parsed()) {
      auto [result, removed] = act_word_set(s, need_word());
      if (output.format == "json")
        output.emit(out, json{{"set", result}, {"removed", removed}}.dump());
      else {
        std::ostringstream ss;
        ss << render_set(result) << "\nremoved [";
        for (size_t i = 0; i < removed.size(); ++i) ss << (i ? "," : "") << removed[i];
        ss << "]";
        output.emit(out, ss.str());
      }
      return 0;
    }
    if (iv_gen->parsed()) {
      auto gen = generators(s, k > 0 ? k : m);
      if (output.format == "json")
        output.emit(out, json{{"generators", gen}}.dump());
      else {
        std::ostringstream ss;
        for (size_t i = 0; i < gen.size(); ++i) ss << (i ? " " : "") << gen[i];
        output.emit(out, ss.str());
      }
      return 0;
    }
    if (iv_skel->parsed()) {
      Skeleton sk = skeleton(s, m, n);
      if (output.format == "json")
        output.emit(out, json(sk).dump());
      else
        output.emit(out, skeleton_text(sk));
      return 0;
    }
    if (iv_mono->parsed()) {
      ParkingWord w = associated_monotone(s, m, n);
      output.emit(out, output.format == "json" ? json(w).dump() : render_word(w));
      return 0;
    }
    if (iv_gamma->parsed()) {
      DyckPath d = gamma(s, m, n);
      output.emit(out, output.format == "json" ? json(d).dump() : render_path(d));
      return 0;
    }
    if (iv_equiv->parsed()) {
      bool same = equivalent(s, parse_set(set2_text), m, n);
      if (output.format == "json")
        output.emit(out, json{{"equivalent", same}}.dump());
      else
        output.emit(out, same ? "true" : "false");
      return same ? 0 : 1;
    }
    if (iv_dec->parsed()) {
      Decomposition dec = decompose(s, m, n);
      if (output.format == "json") {
        output.emit(out, json(dec).dump());
      } else {
        std::ostringstream ss;
        ss << "d " << dec.d << "\n";
        for (int i = 0; i < dec.d; ++i)
          ss << "part " << render_set(dec.parts[i]) << " shift " << dec.shifts[i].str()
             << "\n";
        ss << "shift mean " << dec.shift_mean.str();
        output.emit(out, ss.str());
      }
      return 0;
    }
  }

  if (sp->parsed()) {
    if (sp_fwd->parsed()) {
      AffineWindow w = parse_window(window_text_arg);
      ParkingWord p = sp_forward(w, m);
      output.emit(out, output.format == "json" ? json(p).dump() : render_word(p));
      return 0;
    }
    ParkingWord p = need_word();
    SpInvertResult r = sp_invert_sorted(p, resolve_budget(budget_flag, m, p.n()));
    if (output.format == "json") {
      json j = r;
      if (want_table) j["table"] = invert_table(p, r);
      output.emit(out, j.dump());
    } else {
      std::ostringstream ss;
      ss << "V [";
      for (size_t i = 0; i < r.V.size(); ++i) ss << (i ? "," : "") << r.V[i];
      ss << "]\nN " << r.N << "\nwindow " << window_text(r.window);
      if (want_table) ss << "\n" << invert_table(p, r);
      output.emit(out, ss.str());
    }
    return 0;
  }

  if (sommers->parsed()) {
    auto windows = enumerate_sommers_windows(m, n);
    if (output.format == "json") {
      output.emit(out, json(windows).dump());
    } else {
      std::ostringstream ss;
      for (const auto& w : windows) ss << window_text(w) << "\n";
      ss << "total " << windows.size();
      output.emit(out, ss.str());
    }
    return 0;
  }

  if (verify->parsed()) {
    SuiteReport rep = run_suite(suite_name, m, n, seed, budget_flag);
    if (output.format == "json") {
      output.emit(out, json(rep).dump());
    } else {
      std::ostringstream ss;
      ss << rep.suite << " " << rep.params << ": " << rep.cases << " cases, "
         << rep.failures.size() << " failures, " << rep.wall_ms << " ms";
      for (const auto& f : rep.failures) ss << "\n  " << f;
      output.emit(out, ss.str());
    }
    return rep.passed() ? 0 : 1;
  }

  if (render->parsed()) {
    if (r_dyck->parsed()) {
      ParkingWord w = need_word();
      if (!is_parking_word(w))
        throw std::invalid_argument("render: not a parking word");
      std::vector<int> h = w.letters;
      std::sort(h.begin(), h.end());
      output.emit(out, render_dyck_svg(DyckPath{m, h}));
      return 0;
    }
    if (r_lattice->parsed()) {
      output.emit(out, render_lattice_svg(parse_set(set_text), m, n));
      return 0;
    }
    ParkingWord w = need_word();
    WeylPoint x = point_text.empty() ? fundamental_centroid(m) : parse_point(point_text, m);
    output.emit(out, render_orbit_svg(w, x, resolve_budget(budget_flag, m, w.n())));
    return 0;
  }

  err << "no subcommand\n";
  return 2;
}

}  // namespace

}  // namespace rpf
