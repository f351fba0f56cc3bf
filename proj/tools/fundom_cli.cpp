#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "fundom/verify.hpp"

using json = nlohmann::json;
using namespace fundom;

namespace {

struct Options {
  bool as_json = false;
  bool as_dot = false;
  bool do_verify = false;
  std::string quiver_path;
  std::string algebra;
  std::string object;
};

std::size_t mutation_cap() {
  if (const char* env = std::getenv("FD_CLUSTER_MAX_CLASS"))
    return static_cast<std::size_t>(std::stoull(env));
  return 100000;
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open quiver file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_quiver(ss.str());
}

const Instance& instance_for(const Quiver& h, const std::string& algebra) {
  if (algebra == "Gamma") return gamma_of(h);
  if (algebra == "Lambda") return lambda_of(h);
  throw ParseError("unknown algebra: " + algebra);
}

// Vertex labels of the basic algebra itself: right vertices keep their
// labels, left vertices get a prime.
std::vector<std::string> instance_vertex_labels(const Instance& r) {
  std::vector<std::string> out = r.h->labels;
  for (int a = 0; a < r.left->n; ++a)
    out.push_back(r.h->labels[r.delta[a]] + "'");
  return out;
}

Quiver instance_quiver(const Instance& r) {
  Quiver q = algebra_quiver(end_algebra(projective_triples(r)));
  q.labels = instance_vertex_labels(r);
  return q;
}

void emit_dot(const Quiver& q, std::ostream& os) {
  os << "digraph {\n";
  for (int i = 0; i < q.n; ++i) os << "  \"" << q.labels[i] << "\";\n";
  for (auto [u, v] : q.arrows)
    os << "  \"" << q.labels[u] << "\" -> \"" << q.labels[v] << "\";\n";
  os << "}\n";
}

json quiver_json(const Quiver& q) {
  json arrows = json::array();
  for (auto [u, v] : q.arrows) arrows.push_back({q.labels[u], q.labels[v]});
  return {{"vertices", q.labels}, {"arrows", arrows}};
}

void print_quiver(const Quiver& q, const Options& opt) {
  if (opt.as_dot) {
    emit_dot(q, std::cout);
    return;
  }
  if (opt.as_json) {
    std::cout << quiver_json(q).dump(2) << "\n";
    return;
  }
  std::cout << "vertices: " << q.n << "\n";
  for (auto [u, v] : q.arrows)
    std::cout << "arrow " << q.labels[u] << " -> " << q.labels[v] << "\n";
}

int run_info(const Quiver& h, const Options& opt) {
  std::string type = dynkin_type(h);
  long ind = -1;
  if (is_dynkin(h)) ind = static_cast<long>(indecomposables_h(h).size());
  if (opt.as_json) {
    json j = {{"type", type},
              {"vertices", h.n},
              {"arrows", h.arrows.size()},
              {"sinks", sinks(h).size()}};
    if (ind >= 0) j["indecomposables"] = ind;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "type: " << type << "\n"
            << "vertices: " << h.n << "\n"
            << "arrows: " << h.arrows.size() << "\n"
            << "sinks: " << sinks(h).size() << "\n";
  if (ind >= 0) std::cout << "indecomposables: " << ind << "\n";
  return 0;
}

int run_algebra(const Quiver& h, const Options& opt, const std::string& which) {
  const Instance& r = instance_for(h, which);
  Quiver q = instance_quiver(r);
  if (opt.as_dot || opt.as_json) {
    print_quiver(q, opt);
    return 0;
  }
  print_quiver(q, opt);
  BasicAlgebra e = end_algebra(projective_triples(r));
  if (gldim_basic(e) <= 2)
    std::cout << "relations: " << min_relation_counts(e).sum() << "\n";
  return 0;
}

int run_ar(const Quiver& h, const Options& opt) {
  std::vector<std::string> names;
  std::vector<int> pd, tau_of;
  Eigen::MatrixXi arrows;
  if (opt.algebra == "H") {
    auto inds = indecomposables_h(h);
    const Instance& g = gamma_of(h);
    int m = static_cast<int>(inds.size());
    std::vector<Triple> emb;
    for (const auto& x : inds) emb.push_back(embed_h(g, x.rep));
    for (const auto& t : emb) names.push_back(render_triple(t));
    for (const auto& x : inds) pd.push_back(tau_h(x.rep).is_zero() ? 0 : 1);
    // Dynkin indecomposables are determined by their dimension vectors
    tau_of.assign(m, -1);
    for (int i = 0; i < m; ++i) {
      Rep t = tau_h(inds[i].rep);
      if (t.is_zero()) continue;
      for (int j = 0; j < m; ++j)
        if (inds[j].rep.dims == t.dims) tau_of[i] = j;
    }
    arrows = Eigen::MatrixXi::Zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        int d = hom_dim(emb[i], emb[j]);
        if (d == 0) continue;
        std::vector<Vec> comps;
        for (int k = 0; k < m; ++k) {
          if (k == i || k == j) continue;
          for (const auto& f : hom_triples(emb[i], emb[k]))
            for (const auto& gmap : hom_triples(emb[k], emb[j]))
              comps.push_back(flatten_triple_map(compose(gmap, f)));
        }
        int r2 = 0;
        if (!comps.empty()) {
          Mat b(comps[0].rows(), static_cast<int>(comps.size()));
          for (std::size_t k = 0; k < comps.size(); ++k)
            b.col(static_cast<int>(k)) = comps[k];
          r2 = rank(b);
        }
        arrows(i, j) = d - r2;
      }
  } else {
    const Instance& r = instance_for(h, opt.algebra);
    ARQuiver ar = ar_quiver(r);
    for (const auto& n : ar.nodes) names.push_back(n.name);
    pd = ar.pd;
    tau_of = ar.tau_of;
    arrows = ar.arrows;
  }
  int m = static_cast<int>(names.size());
  if (opt.as_dot) {
    std::cout << "digraph {\n";
    for (int i = 0; i < m; ++i) std::cout << "  \"" << names[i] << "\";\n";
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int a = 0; a < arrows(i, j); ++a)
          std::cout << "  \"" << names[i] << "\" -> \"" << names[j] << "\";\n";
    for (int i = 0; i < m; ++i)
      if (tau_of[i] >= 0)
        std::cout << "  \"" << names[i] << "\" -> \"" << names[tau_of[i]]
                  << "\" [style=dashed];\n";
    std::cout << "}\n";
    return 0;
  }
  if (opt.as_json) {
    json nodes = json::array(), arr = json::array(), tau = json::array();
    for (int i = 0; i < m; ++i)
      nodes.push_back({{"name", names[i]}, {"pd", pd[i]}});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (arrows(i, j) > 0)
          arr.push_back({{"from", names[i]}, {"to", names[j]},
                         {"count", arrows(i, j)}});
    for (int i = 0; i < m; ++i)
      if (tau_of[i] >= 0)
        tau.push_back({{"from", names[i]}, {"to", names[tau_of[i]]}});
    std::cout << json({{"nodes", nodes}, {"arrows", arr}, {"tau", tau}}).dump(2)
              << "\n";
    return 0;
  }
  std::cout << "nodes: " << m << "\n";
  for (int i = 0; i < m; ++i)
    std::cout << "node " << names[i] << " pd=" << pd[i] << "\n";
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int a = 0; a < arrows(i, j); ++a)
        std::cout << "arrow " << names[i] << " -> " << names[j] << "\n";
  for (int i = 0; i < m; ++i)
    if (tau_of[i] >= 0)
      std::cout << "tau " << names[i] << " -> " << names[tau_of[i]] << "\n";
  return 0;
}

std::string dim_string(const Instance& r, const Triple& t) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r.h->n; ++i) os << (i ? "," : "") << t.y.dims[i];
  os << "|";
  for (int a = 0; a < r.left->n; ++a) os << (a ? "," : "") << t.x.dims[a];
  os << "]";
  return os.str();
}

int run_fd(const Quiver& h, const Options& opt) {
  const Instance& r = instance_for(h, opt.algebra);
  ARQuiver ar = ar_quiver(r);
  FundamentalDomain fd = fundamental_domain(r, ar);
  if (opt.as_json) {
    json objs = json::array();
    for (std::size_t p = 0; p < fd.nodes.size(); ++p) {
      const Triple& t = ar.nodes[fd.nodes[p]].rep;
      json dims = json::array();
      for (int i = 0; i < r.h->n; ++i) dims.push_back(t.y.dims[i]);
      for (int a = 0; a < r.left->n; ++a) dims.push_back(t.x.dims[a]);
      objs.push_back({{"name", ar.nodes[fd.nodes[p]].name},
                      {"kind", fd.is_shift[p] ? "shift" : "module"},
                      {"dims", dims}});
    }
    std::cout << json({{"objects", objs}}).dump(2) << "\n";
    return 0;
  }
  std::cout << "objects: " << fd.nodes.size() << "\n";
  for (std::size_t p = 0; p < fd.nodes.size(); ++p)
    std::cout << ar.nodes[fd.nodes[p]].name << " "
              << (fd.is_shift[p] ? "shift" : "module") << " dim="
              << dim_string(r, ar.nodes[fd.nodes[p]].rep) << "\n";
  return 0;
}

int run_tilting(const Quiver& h, const Options& opt) {
  const Instance& r = instance_for(h, opt.algebra);
  ARQuiver ar = ar_quiver(r);
  auto ts = tilting_modules(ar);
  if (opt.as_json) {
    json out = json::array();
    for (const auto& t : ts) {
      json names = json::array();
      for (int n : t.nodes) names.push_back(ar.nodes[n].name);
      out.push_back(names);
    }
    std::cout << json({{"count", ts.size()}, {"tilting", out}}).dump(2) << "\n";
    return 0;
  }
  std::cout << "count: " << ts.size() << "\n";
  for (const auto& t : ts) {
    for (std::size_t k = 0; k < t.nodes.size(); ++k)
      std::cout << (k ? "," : "") << ar.nodes[t.nodes[k]].name;
    std::cout << "\n";
  }
  return 0;
}

int run_cluster_tilting(const Quiver& h, const Options& opt) {
  const Instance& r = gamma_of(h);
  ARQuiver ar = ar_quiver(r);
  FundamentalDomain fd = fundamental_domain(r, ar);
  auto cts = cluster_tilting_objects(ar, fd);
  if (opt.as_json) {
    json out = json::array();
    for (const auto& ct : cts) {
      json names = json::array();
      for (int p : ct.objects) names.push_back(ar.nodes[fd.nodes[p]].name);
      out.push_back(names);
    }
    std::cout << json({{"count", cts.size()}, {"cluster_tilting", out}}).dump(2)
              << "\n";
    return 0;
  }
  std::cout << "count: " << cts.size() << "\n";
  for (const auto& ct : cts) {
    for (std::size_t k = 0; k < ct.objects.size(); ++k)
      std::cout << (k ? "," : "")
                << ar.nodes[fd.nodes[ct.objects[k]]].name;
    std::cout << "\n";
  }
  return 0;
}

int run_ct_quiver(const Quiver& h, const Options& opt) {
  const Instance& r = gamma_of(h);
  ARQuiver ar = ar_quiver(r);
  FundamentalDomain fd = fundamental_domain(r, ar);
  ClusterTiltObj ct;
  std::stringstream ss(opt.object);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    std::string name = tok.substr(a, b - a + 1);
    int pos = -1;
    for (std::size_t p = 0; p < fd.nodes.size(); ++p)
      if (ar.nodes[fd.nodes[p]].name == name) pos = static_cast<int>(p);
    if (pos < 0) throw ParseError("unknown fundamental-domain object: " + name);
    ct.objects.push_back(pos);
  }
  Quiver qc = cluster_tilted_quiver(ar, fd, ct);
  bool in_class = true;
  if (opt.do_verify) in_class = verify_mutation_class(qc, h, mutation_cap());
  if (opt.as_dot) {
    emit_dot(qc, std::cout);
  } else if (opt.as_json) {
    json j = quiver_json(qc);
    if (opt.do_verify) j["mutation_class"] = in_class;
    std::cout << j.dump(2) << "\n";
  } else {
    print_quiver(qc, opt);
    if (opt.do_verify)
      std::cout << "mutation-class: " << (in_class ? "ok" : "violated") << "\n";
  }
  if (!in_class)
    throw std::logic_error("Q_C lies outside the mutation class of Q");
  return 0;
}

int run_gldim(const Quiver& h, const Options& opt) {
  int g = gldim_instance(instance_for(h, opt.algebra));
  if (opt.as_json)
    std::cout << json({{"algebra", opt.algebra}, {"gldim", g}}).dump(2) << "\n";
  else
    std::cout << g << "\n";
  return 0;
}

int run_verify(const Quiver& h, const Options& opt) {
  VerifyReport report = verify_all(h, mutation_cap());
  if (opt.as_json) {
    json items = json::array();
    for (const auto& i : report.items)
      items.push_back({{"label", i.label},
                       {"status", i.status},
                       {"detail", i.detail}});
    std::cout << json({{"items", items}, {"ok", report.all_pass()}}).dump(2)
              << "\n";
  } else {
    for (const auto& i : report.items) {
      std::cout << i.label << ": " << i.status;
      if (!i.detail.empty()) std::cout << " (" << i.detail << ")";
      std::cout << "\n";
    }
  }
  if (!report.all_pass())
    throw std::logic_error("property suite reported failures");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental domains of cluster categories inside module "
               "categories"};
  app.require_subcommand(1);

  Options opt;
  int field = 0;
  app.add_flag("--json", opt.as_json, "machine-readable output");
  app.add_flag("--dot", opt.as_dot, "DOT graph output");
  app.add_option("--field", field, "override the coefficient prime");

  std::string verb_name;
  auto add_verb = [&](const std::string& name, const std::string& desc,
                      bool with_algebra, const char* algebra_default) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->add_option("quiver", opt.quiver_path, "quiver file")->required();
    if (with_algebra) {
      sub->add_option("--algebra", opt.algebra, "H | Gamma | Lambda");
      std::string def = algebra_default;
      sub->callback([&, name, def] {
        verb_name = name;
        if (opt.algebra.empty()) opt.algebra = def;
      });
    } else {
      sub->callback([&, name] { verb_name = name; });
    }
    return sub;
  };

  add_verb("info", "Dynkin type and counts", false, "");
  add_verb("gamma", "the tilted algebra Gamma", false, "");
  add_verb("lambda", "the duplicated algebra Lambda", false, "");
  add_verb("ar", "Auslander-Reiten quiver", true, "Gamma");
  add_verb("fd", "fundamental domain objects", true, "Gamma");
  add_verb("tilting", "enumerate basic tilting modules", true, "Gamma");
  add_verb("cluster-tilting", "enumerate cluster-tilting objects", false, "");
  CLI::App* ctq = add_verb("ct-quiver", "cluster-tilted algebra quiver", false, "");
  ctq->add_option("--object", opt.object, "comma-separated summand labels")
      ->required();
  ctq->add_flag("--verify", opt.do_verify, "check the mutation-class oracle");
  add_verb("gldim", "global dimension", true, "Lambda");
  add_verb("verify", "run the full property suite", false, "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (field > 0) Fp::set_modulus(field);
    Quiver h = load_quiver(opt.quiver_path);
    if (verb_name == "info") return run_info(h, opt);
    if (verb_name == "gamma") return run_algebra(h, opt, "Gamma");
    if (verb_name == "lambda") return run_algebra(h, opt, "Lambda");
    if (verb_name == "ar") return run_ar(h, opt);
    if (verb_name == "fd") return run_fd(h, opt);
    if (verb_name == "tilting") return run_tilting(h, opt);
    if (verb_name == "cluster-tilting") return run_cluster_tilting(h, opt);
    if (verb_name == "ct-quiver") return run_ct_quiver(h, opt);
    if (verb_name == "gldim") return run_gldim(h, opt);
    if (verb_name == "verify") return run_verify(h, opt);
    std::cerr << "unknown verb\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    if (opt.as_json) std::cerr << json({{"error", e.what()}}).dump() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    if (opt.as_json) std::cerr << json({{"error", e.what()}}).dump() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    if (opt.as_json) std::cerr << json({{"error", e.what()}}).dump() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    if (opt.as_json) std::cerr << json({{"error", e.what()}}).dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (opt.as_json) std::cerr << json({{"error", e.what()}}).dump() << "\n";
    return 2;
  }
}
