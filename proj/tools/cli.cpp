#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "zipod/conjugacy.hpp"
#include "zipod/cover.hpp"
#include "zipod/odometer.hpp"
#include "zipod/zipshift.hpp"

namespace zipod::cli {

namespace {

struct Ctx {
  int base = 0;
  std::string tau_text;
  std::string point_text;
  std::string point2_text;
  std::string file_path;
  std::string format = "table";
  std::string out_path;
  long long i = 0;
  long long k = 0;
  long long n = 0;
  long long horizon = -1;
  long long bound = 0;
};

TransitionMap tau_of(const Ctx& ctx) { return parse_tau(ctx.base, ctx.tau_text); }
ZipPoint point_of(const Ctx& ctx) { return parse_point(ctx.base, ctx.point_text); }
ZipPoint point2_of(const Ctx& ctx) { return parse_point(ctx.base, ctx.point2_text); }

bool csv(const Ctx& ctx) { return ctx.format == "csv"; }

CoverIndex cover_index(const Ctx& ctx) {
  if (ctx.i < 0 || ctx.i > 64 || ctx.k < -1 || ctx.k > 64)
    fail(errc::bad_window, "cover index needs 0 <= i and -1 <= k, got (" +
                               std::to_string(ctx.i) + "," +
                               std::to_string(ctx.k) + ")");
  return CoverIndex{static_cast<int>(ctx.i), static_cast<int>(ctx.k)};
}

// "a b ; 0 1" rendering of a window word; side separators only when both
// sides are present.
std::string word_string(CoverIndex idx, int base_j, std::uint32_t code) {
  const std::vector<int> values = decode_window_word(idx, base_j, code);
  std::ostringstream os;
  for (int t = 0; t < idx.i; ++t) {
    if (t) os << ' ';
    os << zsym_char(zsym_from_value(values[static_cast<size_t>(t)]));
  }
  if (idx.i > 0 && idx.k >= 0) os << " ;";
  for (int t = 0; t <= idx.k; ++t) {
    if (t || idx.i > 0) os << ' ';
    os << values[static_cast<size_t>(idx.i + t)];
  }
  return os.str();
}

std::string cylinder_word_string(const Cylinder& c) {
  std::ostringstream os;
  for (int t = 0; t < c.left_len(); ++t) {
    if (t) os << ' ';
    os << zsym_char(c.neg()[static_cast<size_t>(t)]);
  }
  if (c.left_len() > 0 && c.right_len() > 0) os << " ;";
  for (int t = 0; t < c.right_len(); ++t) {
    if (t || c.left_len() > 0) os << ' ';
    os << c.nonneg()[static_cast<size_t>(t)];
  }
  return os.str();
}

void cmd_succ(const Ctx& ctx, std::ostream& os) {
  os << to_literal(successor(point_of(ctx), tau_of(ctx))) << "\n";
}

void cmd_pred(const Ctx& ctx, std::ostream& os) {
  os << to_literal(predecessor(point_of(ctx), tau_of(ctx))) << "\n";
}

void cmd_add(const Ctx& ctx, std::ostream& os) {
  os << to_literal(add(point_of(ctx), point2_of(ctx), tau_of(ctx))) << "\n";
}

void cmd_iter(const Ctx& ctx, std::ostream& os) {
  os << to_literal(iterate(point_of(ctx), tau_of(ctx), ctx.n)) << "\n";
}

void cmd_dist(const Ctx& ctx, std::ostream& os) {
  os << distance(point_of(ctx), point2_of(ctx)).to_string() << "\n";
}

void cmd_shift(const Ctx& ctx, std::ostream& os) {
  os << to_literal(zip_shift(point_of(ctx), tau_of(ctx))) << "\n";
}

void cmd_preimages(const Ctx& ctx, std::ostream& os) {
  for (const ZipPoint& q : zip_shift_preimages(point_of(ctx), tau_of(ctx)))
    os << to_literal(q) << "\n";
}

void cmd_sexp(const Ctx& ctx, std::ostream& os) {
  const long long horizon = ctx.horizon < 0 ? 4096 : ctx.horizon;
  const auto w =
      s_expansivity_witness(point_of(ctx), point2_of(ctx), tau_of(ctx), horizon);
  if (!w)
    os << "no witness within horizon " << horizon << "\n";
  else
    os << "n=" << w->time << " separation=" << w->separation.to_string()
       << "\n";
}

void cmd_cover(const Ctx& ctx, std::ostream& os) {
  const CoverIndex idx = cover_index(ctx);
  const long long m = cover_cardinality(idx, ctx.base);
  if (csv(ctx)) {
    os << "index,word\n";
    for (long long c = 0; c < m; ++c)
      os << c << ',' << word_string(idx, ctx.base, static_cast<std::uint32_t>(c))
         << "\n";
  } else {
    os << "cover (" << idx.i << ',' << idx.k << ") base " << ctx.base
       << ": m=" << m << " window=[" << -idx.i << ".." << idx.k << "]\n";
    for (long long c = 0; c < m; ++c)
      os << c << ": " << word_string(idx, ctx.base, static_cast<std::uint32_t>(c))
         << "\n";
  }
}

void cmd_cycles(const Ctx& ctx, std::ostream& os) {
  const WindowMap wm = induced_window_map(tau_of(ctx), cover_index(ctx));
  const std::vector<long long> lengths = cycle_structure(wm);
  if (csv(ctx)) {
    os << "cycle,length\n";
    for (size_t t = 0; t < lengths.size(); ++t)
      os << t << ',' << lengths[t] << "\n";
  } else {
    os << "cycles:";
    for (long long len : lengths) os << ' ' << len;
    os << "\n";
  }
}

void cmd_visits(const Ctx& ctx, std::ostream& os) {
  const CoverIndex idx = cover_index(ctx);
  const long long horizon = ctx.horizon < 0 ? 1000 : ctx.horizon;
  const VisitReport report =
      orbit_visits(point_of(ctx), tau_of(ctx), idx, horizon);
  if (csv(ctx)) {
    os << "index,word,first_visit\n";
    for (long long c = 0; c < report.m; ++c) {
      os << c << ',' << word_string(idx, ctx.base, static_cast<std::uint32_t>(c))
         << ',';
      if (report.first_visit[static_cast<size_t>(c)] < 0)
        os << '-';
      else
        os << report.first_visit[static_cast<size_t>(c)];
      os << "\n";
    }
  } else {
    os << "m: " << report.m << "\n";
    os << "horizon: " << report.horizon << "\n";
    os << "distinct: " << report.distinct << "\n";
    os << "all: " << (report.all_visited ? "yes" : "no") << "\n";
    for (long long c = 0; c < report.m; ++c) {
      os << c << ": "
         << word_string(idx, ctx.base, static_cast<std::uint32_t>(c))
         << " first=";
      if (report.first_visit[static_cast<size_t>(c)] < 0)
        os << '-';
      else
        os << report.first_visit[static_cast<size_t>(c)];
      os << "\n";
    }
  }
}

void cmd_preimage(const Ctx& ctx, std::ostream& os) {
  const std::vector<Cylinder> parts = preimage_of_basic_cylinder(
      tau_of(ctx), ctx.i, static_cast<int>(ctx.n));
  if (csv(ctx)) {
    os << "lo,hi,word\n";
    for (const Cylinder& c : parts)
      os << c.lo() << ',' << c.hi() << ',' << cylinder_word_string(c) << "\n";
  } else {
    for (const Cylinder& c : parts) os << c.to_string() << "\n";
  }
}

void cmd_rm3(const Ctx& ctx, std::ostream& os) {
  if (ctx.i < 0 || ctx.k < 0)
    fail(errc::bad_argument, "rm3 needs --i >= 0 and --k >= 0");
  const RefinementCounterexample rc = one_sided_refinement_counterexample(
      ctx.base, static_cast<int>(ctx.i), static_cast<int>(ctx.k));
  os << "point_a: " << to_literal(rc.with_a) << "\n";
  os << "point_b: " << to_literal(rc.with_b) << "\n";
  for (const Cylinder& c : rc.chain) os << "chain: " << c.to_string() << "\n";
  os << "member_a: "
     << (std::all_of(rc.chain.begin(), rc.chain.end(),
                     [&](const Cylinder& c) { return in_cylinder(rc.with_a, c); })
             ? "yes"
             : "no")
     << "\n";
  os << "member_b: "
     << (std::all_of(rc.chain.begin(), rc.chain.end(),
                     [&](const Cylinder& c) { return in_cylinder(rc.with_b, c); })
             ? "yes"
             : "no")
     << "\n";
  os << "distance: " << distance(rc.with_a, rc.with_b).to_string() << "\n";
}

void cmd_decompose(const Ctx& ctx, std::ostream& os) {
  const SystemFile sf = load_system_file(ctx.file_path);
  const Decomposition dec =
      minimal_decomposition(sf.sys, static_cast<int>(ctx.n));
  if (csv(ctx)) {
    os << "block,states\n";
    for (size_t b = 0; b < dec.blocks.size(); ++b) {
      os << b << ',';
      for (size_t t = 0; t < dec.blocks[b].size(); ++t) {
        if (t) os << ' ';
        os << dec.blocks[b][t];
      }
      os << "\n";
    }
  } else {
    os << "t: " << dec.t << "\n";
    for (size_t b = 0; b < dec.blocks.size(); ++b) {
      os << "block " << b << ":";
      for (int x : dec.blocks[b]) os << ' ' << x;
      os << "\n";
    }
  }
}

void cmd_project(const Ctx& ctx, std::ostream& os) {
  const SystemFile sf = load_system_file(ctx.file_path);
  const std::vector<int> pi = projection_to_Zn(sf.sys, static_cast<int>(ctx.n));
  if (csv(ctx)) {
    os << "state,pi\n";
    for (size_t x = 0; x < pi.size(); ++x) os << x << ',' << pi[x] << "\n";
  } else {
    os << "pi:";
    for (int v : pi) os << ' ' << v;
    os << "\n";
  }
}

void cmd_sf(const Ctx& ctx, std::ostream& os) {
  const SystemFile sf = load_system_file(ctx.file_path);
  const std::vector<int> S =
      compute_S_of_f(sf.sys, static_cast<int>(ctx.bound));
  if (csv(ctx)) {
    os << "n\n";
    for (int n : S) os << n << "\n";
  } else {
    os << "S:";
    for (int n : S) os << ' ' << n;
    os << "\n";
  }
}

void cmd_verify_te1(const Ctx& ctx, std::ostream& os) {
  const SystemFile sf = load_system_file(ctx.file_path);
  const Te1Report report = verify_te1(sf.family, sf.sys, ctx.base);
  auto line = [&](const char* name, const Te1Report::Condition& c) {
    os << name << ": " << (c.pass ? "pass" : "fail");
    if (!c.pass) os << " — " << c.witness;
    os << "\n";
  };
  line("condition 1 (cardinality and cycle)", report.cardinality_cycle);
  line("condition 2 (refinement)", report.refinement);
  line("condition 3 (separation)", report.separation);
  os << "all: " << (report.all_pass() ? "yes" : "no") << "\n";
}

void cmd_code(const Ctx& ctx, std::ostream& os) {
  const SystemFile sf = load_system_file(ctx.file_path);
  const CodingMap cm = build_coding_map(sf.family, sf.sys, tau_of(ctx));
  if (csv(ctx)) {
    os << "state";
    for (size_t d = 0; d < cm.depths.size(); ++d) os << ",d" << d;
    os << "\n";
    for (int x = 0; x < sf.sys.size(); ++x) {
      os << x;
      for (size_t d = 0; d < cm.depths.size(); ++d)
        os << ','
           << word_string(cm.depths[d], ctx.base,
                          cm.address[d][static_cast<size_t>(x)]);
      os << "\n";
    }
  } else {
    for (int x = 0; x < sf.sys.size(); ++x) {
      os << "state " << x << ":";
      for (size_t d = 0; d < cm.depths.size(); ++d) {
        if (d) os << " |";
        os << ' '
           << word_string(cm.depths[d], ctx.base,
                          cm.address[d][static_cast<size_t>(x)]);
      }
      os << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"zipodometer — exact arithmetic for zip symbolic spaces: the "
               "bilateral adding machine, the zip shift, finite covers, and "
               "finite-depth conjugacy checks"};
  app.require_subcommand(1);

  Ctx ctx;
  auto add_base = [&](CLI::App* cmd) {
    return cmd->add_option("--base", ctx.base, "alphabet size j (digits 0..j-1)")
        ->required();
  };
  auto add_tau = [&](CLI::App* cmd) {
    return cmd
        ->add_option("--tau", ctx.tau_text,
                     "transition map, e.g. \"0:b,1:a\" (every digit once)")
        ->required();
  };
  auto add_point = [&](CLI::App* cmd) {
    return cmd
        ->add_option("--point", ctx.point_text,
                     "point literal, e.g. \"(a) b ; 2 1 (0)\"")
        ->required();
  };
  auto add_point2 = [&](CLI::App* cmd) {
    return cmd->add_option("--point2", ctx.point2_text, "second point literal")
        ->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    return cmd->add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"table", "csv"}));
  };
  auto add_out = [&](CLI::App* cmd) {
    return cmd->add_option("--out", ctx.out_path,
                           "also write the output to this file");
  };
  auto add_file = [&](CLI::App* cmd) {
    return cmd->add_option("--file", ctx.file_path, "system file path")
        ->required();
  };

  CLI::App* succ = app.add_subcommand("succ", "successor under the adding machine");
  add_base(succ); add_tau(succ); add_point(succ); add_out(succ);
  CLI::App* pred = app.add_subcommand("pred", "predecessor under the adding machine");
  add_base(pred); add_tau(pred); add_point(pred); add_out(pred);
  CLI::App* addc = app.add_subcommand("add", "digitwise sum of two points");
  add_base(addc); add_tau(addc); add_point(addc); add_point2(addc); add_out(addc);
  CLI::App* iterc = app.add_subcommand("iter", "n-fold successor (negative n: predecessor)");
  add_base(iterc); add_tau(iterc); add_point(iterc); add_out(iterc);
  iterc->add_option("-n", ctx.n, "iteration count (may be negative)")->required();
  CLI::App* dist = app.add_subcommand("dist", "metric distance between two points");
  add_base(dist); add_point(dist); add_point2(dist); add_out(dist);
  CLI::App* shift = app.add_subcommand("shift", "one zip shift step");
  add_base(shift); add_tau(shift); add_point(shift); add_out(shift);
  CLI::App* preimages = app.add_subcommand("preimages", "all zip shift preimages");
  add_base(preimages); add_tau(preimages); add_point(preimages); add_out(preimages);
  CLI::App* sexp = app.add_subcommand("sexp", "expansivity witness for two points");
  add_base(sexp); add_tau(sexp); add_point(sexp); add_point2(sexp); add_out(sexp);
  sexp->add_option("--horizon", ctx.horizon, "search horizon (default 4096)");
  CLI::App* cover = app.add_subcommand("cover", "enumerate the (i,k) cover");
  add_base(cover); add_out(cover); add_format(cover);
  cover->add_option("--i", ctx.i, "left depth (>= 0)")->required();
  cover->add_option("--k", ctx.k, "right depth (>= -1)")->required();
  CLI::App* cycles = app.add_subcommand("cycles", "cycle structure of the induced cover action");
  add_base(cycles); add_tau(cycles); add_out(cycles); add_format(cycles);
  cycles->add_option("--i", ctx.i, "left depth (>= 0)")->required();
  cycles->add_option("--k", ctx.k, "right depth (>= -1)")->required();
  CLI::App* visits = app.add_subcommand("visits", "cover cylinders visited by a successor orbit");
  add_base(visits); add_tau(visits); add_point(visits); add_out(visits); add_format(visits);
  visits->add_option("--i", ctx.i, "left depth (>= 0)")->required();
  visits->add_option("--k", ctx.k, "right depth (>= -1)")->required();
  visits->add_option("--horizon", ctx.horizon, "iterations to examine (default 1000)");
  CLI::App* preimage = app.add_subcommand(
      "preimage", "adding-machine preimage of a basic cylinder");
  add_base(preimage); add_tau(preimage); add_out(preimage); add_format(preimage);
  preimage->add_option("--i", ctx.i, "constrained index (may be negative)")->required();
  preimage
      ->add_option("-n", ctx.n,
                   "constrained symbol value (digit at index >= 0; 0=a, 1=b "
                   "at negative indices)")
      ->required();
  CLI::App* rm3 = app.add_subcommand(
      "rm3", "two points no one-sided refinement chain separates");
  add_base(rm3); add_out(rm3);
  rm3->add_option("--i", ctx.i, "fixed left depth of the chain")->required();
  rm3->add_option("--k", ctx.k, "deepest right depth of the chain")->required();
  CLI::App* decompose = app.add_subcommand(
      "decompose", "minimal decomposition of a finite system under f^n");
  add_file(decompose); add_out(decompose); add_format(decompose);
  decompose->add_option("-n", ctx.n, "power of the map")->required();
  CLI::App* project = app.add_subcommand(
      "project", "projection of a finite system onto the n-cycle");
  add_file(project); add_out(project); add_format(project);
  project->add_option("-n", ctx.n, "cycle length")->required();
  CLI::App* sfc = app.add_subcommand("sf", "powers n admitting fresh f^n-minimal sets");
  add_file(sfc); add_out(sfc); add_format(sfc);
  sfc->add_option("--bound", ctx.bound, "largest power to examine")->required();
  CLI::App* verify = app.add_subcommand(
      "verify-te1", "check the three finite conjugacy conditions");
  add_file(verify); add_base(verify); add_out(verify);
  CLI::App* code = app.add_subcommand(
      "code", "window-word addresses realizing the conjugacy");
  add_file(code); add_base(code); add_tau(code); add_out(code); add_format(code);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("zipodometer");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream os;
  try {
    if (app.got_subcommand(succ)) cmd_succ(ctx, os);
    else if (app.got_subcommand(pred)) cmd_pred(ctx, os);
    else if (app.got_subcommand(addc)) cmd_add(ctx, os);
    else if (app.got_subcommand(iterc)) cmd_iter(ctx, os);
    else if (app.got_subcommand(dist)) cmd_dist(ctx, os);
    else if (app.got_subcommand(shift)) cmd_shift(ctx, os);
    else if (app.got_subcommand(preimages)) cmd_preimages(ctx, os);
    else if (app.got_subcommand(sexp)) cmd_sexp(ctx, os);
    else if (app.got_subcommand(cover)) cmd_cover(ctx, os);
    else if (app.got_subcommand(cycles)) cmd_cycles(ctx, os);
    else if (app.got_subcommand(visits)) cmd_visits(ctx, os);
    else if (app.got_subcommand(preimage)) cmd_preimage(ctx, os);
    else if (app.got_subcommand(rm3)) cmd_rm3(ctx, os);
    else if (app.got_subcommand(decompose)) cmd_decompose(ctx, os);
    else if (app.got_subcommand(project)) cmd_project(ctx, os);
    else if (app.got_subcommand(sfc)) cmd_sf(ctx, os);
    else if (app.got_subcommand(verify)) cmd_verify_te1(ctx, os);
    else if (app.got_subcommand(code)) cmd_code(ctx, os);
  } catch (const parse_failure& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  out << os.str();
  if (!ctx.out_path.empty()) {
    std::ofstream f(ctx.out_path);
    if (!f) {
      err << "error (bad_argument): cannot write '" << ctx.out_path << "'\n";
      return 1;
    }
    f << os.str();
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 1 ? static_cast<size_t>(argc - 1) : 0);
  for (int t = 1; t < argc; ++t) args.emplace_back(argv[t]);
  return run(args, out, err);
}

}  // namespace zipod::cli
