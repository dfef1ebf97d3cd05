#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "chirality/cert/catalog.hpp"
#include "chirality/dga/minimal_model.hpp"
#include "chirality/groups/metacyclic.hpp"
#include "chirality/lens/lens.hpp"
#include "chirality/products/manifold.hpp"
#include "chirality/products/planner.hpp"
#include "chirality/torus/mapping_torus.hpp"

namespace chirality::cli {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(const Certificate& c) {
    const Json j = to_json(c);
    out_ << j.dump() << '\n';
    const Verdict v = c.verdict();
    err_ << to_string(c.kind) << ": " << to_string(v) << "  " << c.claim << '\n';
    for (const auto& check : c.checks) {
      if (check.verdict != Verdict::Pass) {
        err_ << "  " << check.name << ": " << to_string(check.verdict) << (check.mandatory ? "" : " (advisory)")
             << '\n';
      }
    }
    if (record) catalog_append(j, catalog_path());
    worst_ = worst_ ? combine(*worst_, v) : v;
  }

  std::filesystem::path catalog_path() const {
    return catalog.empty() ? default_catalog_path() : std::filesystem::path(catalog);
  }

  int result() const { return worst_ ? exit_code(*worst_) : 0; }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

  std::string catalog;
  bool record = false;

 private:
  std::ostream& out_;
  std::ostream& err_;
  std::optional<Verdict> worst_;
};

struct Args {
  std::size_t torus_n = 0;
  std::optional<std::uint64_t> torus_bound;
  std::uint64_t lens_t = 0;
  std::vector<std::uint64_t> lens_q;
  unsigned lens_k = 0;
  std::uint64_t lens_limit = 1'000'000;
  std::string dga_algebra_path;
  int dga_sweep_bound = 2;
  int dga_star_bound = 3;
  std::string dga_matrix;
  std::size_t plan_dim = 0;
  std::optional<std::size_t> plan_max_dim;
  bool plan_simply_connected = false;
  products::PlanOptions plan_opts;
  std::size_t groups_count = 0;
  std::uint64_t groups_bound = 0;
  std::uint64_t ob_t = 0;
  std::size_t ob_dim = 0;
  long ob_signature = 0;
  std::string ob_name;
  CatalogFilter cat_filter;
  std::string cat_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// "1,0,0;0,1,0;0,0,1", rows separated by ';'.
exact::IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<mpz_class>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<mpz_class> entries;
    std::stringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) {
      e.erase(std::remove_if(e.begin(), e.end(), ::isspace), e.end());
      mpz_class v;
      if (e.empty() || v.set_str(e, 10) != 0) throw InputError("bad matrix entry '" + e + "'");
      entries.push_back(v);
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw InputError("empty matrix");
  exact::IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw InputError("matrix rows have different lengths");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

dga::GcAlgebra load_algebra(const std::string& path, std::string& source) {
  if (path.empty()) {
    source = "built-in";
    return dga::minimal_model();
  }
  source = read_file(path);
  return dga::parse_algebra(source);
}

void add_torus(CLI::App& app, Session& s, Args& a, std::function<void()>& action) {
  auto* torus = app.add_subcommand("torus", "Mapping tori of the family F with char poly X^n - X + 1");
  torus->require_subcommand(1);
  auto* certify = torus->add_subcommand("certify", "Certify conditions (a)-(c) for the family matrix");
  certify->add_option("--n", a.torus_n, "Size of F (even, >= 2)")->required();
  certify->add_option("--brute-bound", a.torus_bound, "Entry bound for the falsifier search");
  certify->callback([&] {
    action = [&] {
      const auto cert = torus::certify_mapping_torus(a.torus_n, a.torus_bound.value_or(torus::default_brute_bound(a.torus_n)));
      s.emit(torus::to_certificate(cert));
    };
  });
}

void add_lens(CLI::App& app, Session& s, Args& a, std::function<void()>& action) {
  auto* lens = app.add_subcommand("lens", "Lens space degree arithmetic");
  lens->require_subcommand(1);
  for (const char* name : {"degrees", "chirality"}) {
    auto* sub = lens->add_subcommand(name, name == std::string("degrees") ? "Realizable self-map degrees mod t"
                                                                          : "Decide strong chirality");
    sub->add_option("--t", a.lens_t, "Order of the cyclic group")->required();
    sub->add_option("--q", a.lens_q, "Rotation parameters q1,q2,...")->required()->delimiter(',');
    sub->callback([&] {
      action = [&] {
        const lens::LensSpace l(a.lens_t, a.lens_q);
        s.emit(to_certificate(l, lens::is_strongly_chiral(l)));
      };
    });
  }
  auto* min = lens->add_subcommand("min-order", "Lens space whose orientation reversals have order exactly 2^k");
  min->add_option("--k", a.lens_k, "2-adic exponent, 1..60")->required();
  min->add_option("--limit", a.lens_limit, "Search limit for the prime progression");
  min->callback([&] { action = [&] { s.emit(to_certificate(lens::theoremc_construct(a.lens_k, a.lens_limit))); }; });
}

void add_dga(CLI::App& app, Session& s, Args& a, std::function<void()>& action) {
  auto* dga = app.add_subcommand("dga", "Rational minimal model checks");
  dga->require_subcommand(1);

  auto* v9 = dga->add_subcommand("verify-dim9", "Degree-9 fundamental class checks");
  v9->add_option("--algebra", a.dga_algebra_path, "Algebra text file (default: built-in model)");
  v9->add_option("--sweep-bound", a.dga_sweep_bound, "Entry bound for the unimodular sweep (0 skips it)");
  v9->callback([&] {
    action = [&] {
      std::string source;
      const auto alg = load_algebra(a.dga_algebra_path, source);
      s.emit(dga::to_certificate(dga::verify_dim9(alg, a.dga_sweep_bound), source));
    };
  });

  auto* v13 = dga->add_subcommand("verify-dim13", "Coefficient of (class) x^2 under sampled admissible maps");
  v13->add_option("--star-bound", a.dga_star_bound, "Star entries range over [-S, S]");
  v13->callback([&] { action = [&] { s.emit(dga::to_certificate(dga::dim13_check(a.dga_star_bound))); }; });

  auto* adm = dga->add_subcommand("admissible", "Test one H^2 matrix (columns are images)");
  adm->add_option("--matrix", a.dga_matrix, "Rows separated by ';', entries by ','")->required();
  adm->add_option("--algebra", a.dga_algebra_path, "Algebra text file (default: built-in model)");
  adm->callback([&] {
    action = [&] {
      std::string source;
      const auto alg = load_algebra(a.dga_algebra_path, source);
      s.emit(dga::admissibility_certificate(alg, parse_matrix(a.dga_matrix)));
    };
  });
}

void add_plan(CLI::App& app, Session& s, Args& a, std::function<void()>& action) {
  auto* plan = app.add_subcommand("plan", "Strongly chiral construction recipe per dimension");
  plan->add_option("--dim", a.plan_dim, "Target dimension")->required();
  plan->add_option("--max-dim", a.plan_max_dim, "Plan every dimension from --dim to this one");
  plan->add_flag("--simply-connected", a.plan_simply_connected, "Simply connected track");
  plan->add_flag("--bordism", a.plan_opts.bordism_notes, "Attach the bordism-class note");
  plan->add_option("--torus-bound", a.plan_opts.torus_bound, "Falsifier bound for nested mapping-torus certificates");
  plan->callback([&] {
    action = [&] {
      const std::size_t last = a.plan_max_dim.value_or(a.plan_dim);
      if (last < a.plan_dim) throw InputError("--max-dim must be >= --dim");
      for (std::size_t n = a.plan_dim; n <= last; ++n) s.emit(products::to_certificate(products::plan_dimension(n, a.plan_simply_connected, a.plan_opts)));
    };
  });
}

void add_groups(CLI::App& app, Session& s, Args& a, std::function<void()>& action) {
  auto* groups = app.add_subcommand("groups", "Fundamental groups of strongly chiral 4-manifolds");
  groups->require_subcommand(1);
  auto* search = groups->add_subcommand("h4-search", "Smallest group orders satisfying the H_4 condition");
  search->add_option("--count", a.groups_count, "Number of tuples")->required();
  search->add_option("--bound", a.groups_bound, "Largest prime considered")->required();
  search->callback([&] { action = [&] { s.emit(groups::to_certificate(groups::search_tuples(a.groups_count, a.groups_bound))); }; });
}

void add_obstruction(CLI::App& app, Session& s, Args& a, std::function<void()>& action) {
  auto* ob = app.add_subcommand("obstruction", "Single obstruction tests");
  ob->require_subcommand(1);

  auto* linking = ob->add_subcommand("linking", "-1 not a square mod t for middle torsion Z/t, dim = 3 mod 4");
  linking->add_option("--t", a.ob_t, "Order of the middle torsion")->required();
  linking->add_option("--dim", a.ob_dim, "Dimension")->required();
  linking->add_option("--name", a.ob_name, "Manifold name");
  linking->callback([&] {
    action = [&] { s.emit(products::linking_certificate(a.ob_t, a.ob_dim, a.ob_name.empty() ? "M" : a.ob_name)); };
  });

  auto* sig = ob->add_subcommand("signature", "Nonzero signature, dim = 0 mod 4");
  sig->add_option("--dim", a.ob_dim, "Dimension")->required();
  sig->add_option("--signature", a.ob_signature, "Signature")->required();
  sig->add_option("--name", a.ob_name, "Manifold name");
  sig->callback([&] {
    action = [&] {
      products::ManifoldDescriptor d;
      d.name = a.ob_name.empty() ? "M" : a.ob_name;
      d.dimension = a.ob_dim;
      d.betti.resize(a.ob_dim + 1);
      d.betti.front() = d.betti.back() = 1;
      d.signature = a.ob_signature;
      s.emit(products::signature_certificate(d));
    };
  });
}

void add_catalog(CLI::App& app, Session& s, Args& a, std::function<void()>& action) {
  auto* cat = app.add_subcommand("catalog", "Append-only certificate catalog");
  cat->require_subcommand(1);

  auto* list = cat->add_subcommand("list", "Print catalog records");
  list->add_option("--kind", a.cat_filter.kind, "Filter by kind");
  list->add_option("--dimension", a.cat_filter.dimension, "Filter by inputs.dimension");
  list->add_option("--verdict", a.cat_filter.verdict, "Filter by verdict");
  list->callback([&] {
    action = [&] {
      const auto result = catalog_query(s.catalog_path(), a.cat_filter);
      for (const auto& w : result.warnings) s.err() << "warning: " << w << '\n';
      for (const auto& r : result.records) s.out() << r.dump() << '\n';
      s.err() << result.records.size() << " record(s) in " << s.catalog_path().string() << '\n';
    };
  });

  auto* add = cat->add_subcommand("add", "Validate certificates (JSON lines) and append them");
  add->add_option("file", a.cat_file, "Input file, '-' for standard input")->required();
  add->callback([&] {
    action = [&] {
      std::ifstream in_file;
      if (a.cat_file != "-") {
        in_file.open(a.cat_file);
        if (!in_file) throw InputError("cannot read " + a.cat_file);
      }
      std::istream& in = a.cat_file == "-" ? std::cin : in_file;
      std::string line;
      std::size_t added = 0;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const Json j = Json::parse(line);
        certificate_from_json(j);
        catalog_append(j, s.catalog_path());
        ++added;
      }
      s.err() << "appended " << added << " certificate(s) to " << s.catalog_path().string() << '\n';
    };
  });
}

void report_error(std::ostream& out, std::ostream& err, const std::string& type, const std::string& message) {
  out << Json{{"error", {{"type", type}, {"message", message}}}, {"exit_code", 2}}.dump() << '\n';
  err << "error: " << message << '\n';
}

}  // namespace

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return 0;
    case Verdict::Fail:
    case Verdict::NoObstruction:
      return 1;
    case Verdict::Inconclusive:
      return 2;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session session(out, err);
  Args parsed;
  std::function<void()> action;

  CLI::App app("Chirality certificates for closed manifolds", "chirality");
  app.require_subcommand(1);
  app.add_option("--catalog", session.catalog, "Catalog path (default: $CHIRALITY_CATALOG or ./chirality-catalog.jsonl)");
  app.add_flag("--record", session.record, "Append every emitted certificate to the catalog");
  app.add_flag_callback("--version", [&] { throw CLI::CallForVersion(std::string(tool_version()), 0); },
                        "Print the tool version");
  add_torus(app, session, parsed, action);
  add_lens(app, session, parsed, action);
  add_dga(app, session, parsed, action);
  add_plan(app, session, parsed, action);
  add_groups(app, session, parsed, action);
  add_obstruction(app, session, parsed, action);
  add_catalog(app, session, parsed, action);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(out, err, "usage", e.what());
    return 2;
  }

  try {
    if (action) action();
  } catch (const std::exception& e) {
    report_error(out, err, "input", e.what());
    return 2;
  }
  return session.result();
}

}  // namespace chirality::cli
