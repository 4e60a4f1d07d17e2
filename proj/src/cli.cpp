#include "homdual/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "homdual/ac_decider.hpp"
#include "homdual/duality.hpp"
#include "homdual/error.hpp"
#include "homdual/families.hpp"
#include "homdual/graph_io.hpp"
#include "homdual/hom_search.hpp"
#include "homdual/unoriented.hpp"

namespace homdual::cli {

namespace {

std::string join(const std::vector<Vertex>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Options {
  std::string family;
  int n = 0;
  std::string out_path;
  std::string g_path;
  std::string h_path;
  std::string cert_path;
  std::string left_path;
  std::string right_path;
  std::string t_path;
  bool json = false;
  int max_order = 0;
  int samples = 0;
  int sample_order = 8;
  std::uint64_t seed = 0;
  int cycle = 0;
  std::string method;
  bool induced = false;
  bool acyclic = false;
  int k = 0;
  std::size_t guard = kDefaultHomGuard;
};

int cmd_gen(const Options& o, std::ostream& out) {
  const auto tag = parse_family_name(o.family);
  if (!tag) throw ValidationError("unknown family '" + o.family + "'");
  const std::string text = *tag == FamilyTag::UndirectedCycle ? format_graph(make_undirected_cycle(o.n))
                                                              : format_graph(make_family({*tag, o.n}));
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path);
    if (!file || !(file << text)) throw ValidationError("cannot write '" + o.out_path + "'");
  }
  return kPositive;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const AnyGraph g = read_graph_file(o.g_path);
  const AnyGraph h = read_graph_file(o.h_path);
  std::optional<std::vector<Vertex>> map;
  if (g.index() != h.index()) throw ValidationError("--g and --h must both be digraphs or both be graphs");
  if (const auto* dg = std::get_if<Digraph>(&g)) {
    if (auto hom = exists_hom(*dg, std::get<Digraph>(h), o.guard)) map = hom->map;
  } else {
    map = undirected_hom(std::get<UndirectedGraph>(g), std::get<UndirectedGraph>(h), o.guard);
  }
  if (!map) {
    out << "no\n";
    return kNegative;
  }
  out << "yes\nmapping " << join(*map) << "\n";
  return kPositive;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const Digraph g = read_digraph_file(o.g_path);
  const Certificate cert = decide_ac(g, o.n);
  if (o.json) {
    out << certificate_to_json(cert) << "\n";
  } else if (cert.verdict == Verdict::Yes) {
    out << "yes\nmapping " << join(cert.mapping) << "\n";
  } else {
    out << "no\nl " << cert.l << "\nwalk " << join(cert.walk.vertices) << "\ndirections "
        << Pattern{cert.walk.steps}.to_string() << "\n";
  }
  return cert.verdict == Verdict::Yes ? kPositive : kNegative;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Digraph g = read_digraph_file(o.g_path);
  const Certificate cert = certificate_from_json(read_text(o.cert_path));
  const VerifyResult r = verify_certificate(g, o.n, cert);
  if (r.ok) {
    out << "valid\n";
    return kPositive;
  }
  out << "invalid: " << r.reason << "\n";
  return kNegative;
}

int cmd_images(const Options& o, std::ostream& out) {
  const ImageSet set = surjective_images(make_q_path(o.n));
  out << "# " << set.members.size() << " images of Q_" << o.n << "\n";
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    out << "# image " << i + 1 << "\n" << format_graph(set.members[i]);
  }
  return kPositive;
}

int cmd_core(const Options& o, std::ostream& out) {
  out << format_graph(core_of(read_digraph_file(o.g_path)));
  return kPositive;
}

int cmd_duality(const Options& o, std::ostream& out) {
  const Digraph left = read_digraph_file(o.left_path);
  const Digraph right = read_digraph_file(o.right_path);
  SampleSpec sampling;
  sampling.samples = o.samples;
  sampling.max_order = o.sample_order;
  sampling.min_order = std::min(o.max_order + 1, o.sample_order);
  sampling.seed = o.seed;
  const DualityReport report = check_duality_pair(left, right, o.max_order, sampling, o.guard);
  out << (o.json ? report.to_json() + "\n" : report.to_text());
  return report.ok() ? kPositive : kNegative;
}

int cmd_cycle_color(const Options& o, std::ostream& out) {
  const UndirectedGraph g = read_undirected_file(o.g_path);
  ColourMethod method;
  if (o.method == "hom") {
    method = ColourMethod::Hom;
  } else if (o.method == "orientation") {
    method = ColourMethod::Orientation;
  } else if (o.method == "pattern") {
    method = ColourMethod::Pattern;
  } else {
    throw ValidationError("--method must be hom, orientation or pattern");
  }
  const ColourResult r = cycle_colourable(g, o.cycle, method);
  if (!r.colourable) {
    out << "no\n";
    return kNegative;
  }
  out << "yes\n";
  if (!r.mapping.empty()) out << "mapping " << join(r.mapping) << "\n";
  if (r.orientation) out << format_graph(r.orientation->digraph());
  return kPositive;
}

int cmd_orient(const Options& o, std::ostream& out) {
  const UndirectedGraph g = read_undirected_file(o.g_path);
  const Containment mode = o.induced ? Containment::Induced : Containment::Subgraph;
  const ForbiddenSet f = o.acyclic ? acyclic_forbidden_set(o.n, mode) : image_forbidden_set(o.n, mode);
  const auto found = find_f_free_orientation(g, f);
  if (!found) {
    out << "none\n";
    return kNegative;
  }
  out << format_graph(found->digraph());
  return kPositive;
}

int cmd_rghv(const Options& o, std::ostream& out) {
  const UndirectedGraph g = read_undirected_file(o.g_path);
  const RghvResult r = rghv_colourability(g, o.k);
  out << "colouring " << (r.colourable ? "yes" : "no") << "\n";
  if (r.colourable) out << "colours " << join(r.colouring) << "\n";
  out << "orientation " << (r.orientation_found ? "yes" : "no") << "\n";
  if (r.orientation) out << format_graph(r.orientation->digraph());
  if (!r.agree()) out << "sides disagree\n";
  return r.colourable && r.agree() ? kPositive : kNegative;
}

int cmd_tree_dual(const Options& o, std::ostream& out) {
  const Digraph t = read_digraph_file(o.t_path);
  out << "# height " << tree_height(t) << "\n" << format_graph(tree_dual(t));
  return kPositive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homomorphisms into oriented cycles, duality pairs and certificates."};
  app.require_subcommand(1);
  app.name(args.empty() ? "homdual" : args[0]);
  Options o;

  auto* gen = app.add_subcommand("gen", "print a family member in the text graph format");
  gen->add_option("--family", o.family, "dipath, dicycle, altpath, qpath, accycle, tt or cycle")->required();
  gen->add_option("--n", o.n)->required();
  gen->add_option("--out", o.out_path);

  auto* decide = app.add_subcommand("decide", "brute-force homomorphism search g -> h");
  decide->add_option("--g", o.g_path)->required();
  // -h would collide with --h
  decide->set_help_flag("--help", "print this help message and exit");
  decide->add_option("--h", o.h_path)->required();
  decide->add_option("--guard", o.guard, "max |V_g| * |V_h|; 0 disables");

  auto* certify = app.add_subcommand("certify-ac", "decide g -> AC_n with a certificate");
  certify->add_option("--g", o.g_path)->required();
  certify->add_option("--n", o.n)->required();
  certify->add_flag("--json", o.json);

  auto* verify = app.add_subcommand("verify-cert", "check a JSON certificate against g");
  verify->add_option("--g", o.g_path)->required();
  verify->add_option("--n", o.n)->required();
  verify->add_option("--cert", o.cert_path)->required();

  auto* images = app.add_subcommand("images", "minimal surjective images of Q_n");
  images->add_option("--n", o.n)->required();

  auto* core = app.add_subcommand("core", "core of a digraph");
  core->add_option("--g", o.g_path)->required();

  auto* duality = app.add_subcommand("duality", "test a duality pair on small and sampled digraphs");
  duality->add_option("--left", o.left_path)->required();
  duality->add_option("--right", o.right_path)->required();
  duality->add_option("--max-order", o.max_order)->required();
  duality->add_option("--samples", o.samples);
  duality->add_option("--sample-order", o.sample_order, "largest sampled order");
  auto* seed = duality->add_option("--seed", o.seed);
  duality->add_option("--guard", o.guard, "max |V_g| * |V_h|; 0 disables");
  duality->add_flag("--json", o.json);

  auto* colour = app.add_subcommand("cycle-color", "is g homomorphic to the cycle C_N");
  colour->add_option("--g", o.g_path)->required();
  colour->add_option("--cycle", o.cycle)->required();
  colour->add_option("--method", o.method, "hom, orientation or pattern")->required();

  auto* orient = app.add_subcommand("orient-search", "orientation of g free of the images of Q_N");
  orient->add_option("--g", o.g_path)->required();
  orient->add_option("--fn", o.n)->required();
  orient->add_flag("--induced", o.induced);
  orient->add_flag("--acyclic", o.acyclic);

  auto* rghv = app.add_subcommand("rghv", "k-colouring against short-path orientations");
  rghv->add_option("--g", o.g_path)->required();
  rghv->add_option("--k", o.k)->required();

  auto* dual = app.add_subcommand("tree-dual", "dual of an oriented tree of height 1..3");
  dual->add_option("--t", o.t_path)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("homdual");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsage;
  }

  try {
    if (*duality && o.samples > 0 && seed->count() == 0) {
      throw ValidationError("--samples requires an explicit --seed");
    }
    if (*gen) return cmd_gen(o, out);
    if (*decide) return cmd_decide(o, out);
    if (*certify) return cmd_certify(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*images) return cmd_images(o, out);
    if (*core) return cmd_core(o, out);
    if (*duality) return cmd_duality(o, out);
    if (*colour) return cmd_cycle_color(o, out);
    if (*orient) return cmd_orient(o, out);
    if (*rghv) return cmd_rghv(o, out);
    if (*dual) return cmd_tree_dual(o, out);
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ContractError& e) {
    err << "internal: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace homdual::cli
