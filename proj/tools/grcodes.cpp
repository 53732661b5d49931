// Command-line front end: JSON reports on stdout, a short summary on stderr.

#include "grcodes/error.hpp"
#include "grcodes/search.hpp"
#include "grcodes/twod.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace grcodes;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kParse = 2, kCertificate = 3, kBudget = 4 };

struct Common {
  bool json_only = false;
  unsigned threads = 0;
};

void summary(const Common &c, const std::string &text) {
  if (!c.json_only)
    std::cerr << text << "\n";
}

void emit(const json &j) { std::cout << j.dump() << "\n"; }

json literal_matrix(const Matrix &m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(m.field()->to_literal(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json code_params(const CodeParams &p) {
  return {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"metric", to_string(p.metric)},
          {"exact", p.exact}};
}

json qecc_json(const QeccParams &q) {
  return {{"n", q.n},
          {"k", q.k},
          {"d", q.d},
          {"base_q", q.base_q},
          {"construction", to_string(q.construction)},
          {"d_exact", q.d_exact},
          {"classical", {{"n", q.classical.n}, {"k", q.classical.k}, {"d", q.classical.d}}},
          {"degenerate_dual_gap", q.degenerate_dual_gap}};
}

json certificate_json(const OrthoCertificate &c) {
  json j = {{"kind", to_string(c.kind)}, {"identity", c.identity}, {"holds", c.holds}};
  if (!c.failed_clause.empty())
    j["failed_clause"] = c.failed_clause;
  if (c.residual)
    j["residual"] = to_string(*c.residual);
  std::size_t nz = 0;
  if (c.matrix_residual)
    for (std::size_t r = 0; r < c.matrix_residual->rows(); ++r)
      nz += hamming_weight(c.matrix_residual->row(r));
  j["residual_matrix_nonzero"] = nz;
  return j;
}

struct DistanceFlags {
  std::string mode = "exact";
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
  std::size_t target = 0;

  DistanceOptions options(unsigned threads) const {
    DistanceOptions o;
    o.budget = budget;
    o.threads = threads;
    o.random_fallback = mode == "auto";
    o.seed = seed;
    o.samples = samples;
    return o;
  }
};

void add_distance_flags(CLI::App *cmd, DistanceFlags &d) {
  cmd->add_option("--mode", d.mode, "Distance mode: exact, random or auto")
      ->check(CLI::IsMember({"exact", "random", "auto"}))
      ->capture_default_str();
  cmd->add_option("--distance-budget", d.budget, "Maximum codewords to enumerate")
      ->capture_default_str();
  cmd->add_option("--seed", d.seed, "Seed for information-set sampling")->capture_default_str();
  cmd->add_option("--samples", d.samples, "Information sets to sample")->capture_default_str();
  cmd->add_option("--target", d.target, "Stop sampling once a codeword of at most this weight is seen")
      ->capture_default_str();
}

CodeParams distance(const LinearCode &c, const DistanceFlags &d, unsigned threads) {
  if (d.mode == "random") {
    RandomWeightOptions r;
    r.seed = d.seed;
    r.samples = d.samples;
    r.target = d.target;
    r.threads = threads;
    return min_weight_random(c, r);
  }
  return code_distance(c, Metric::Hamming, nullptr, d.options(threads));
}

std::string iso_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Group ring codes, quantum code parameters and 2D-cyclic codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json-only", common.json_only, "Suppress the summary on stderr");
  app.add_option("--threads", common.threads, "Worker threads (0 = all cores)");

  std::string field_s = "GF(2)", group_s, element_s, element_b_s, kind_s = "euclidean";
  bool show_matrix = false;
  DistanceFlags dist;

  auto *code = app.add_subcommand("code", "Parameters of the code generated by sigma(a)");
  code->add_option("--field", field_s, "Field, e.g. GF(2) or GF(3^2;modulus=2,2,1)")
      ->capture_default_str();
  code->add_option("--group", group_s, "Group, e.g. C5xC3:inner=2 or D5:gens=b,a")->required();
  code->add_option("--element", element_s, "Group ring element")->required();
  code->add_flag("--matrix", show_matrix, "Include the generator matrix");
  add_distance_flags(code, dist);

  auto *qecc = app.add_subcommand("qecc", "Certify self-orthogonality and derive [[n,k,d]]");
  qecc->add_option("--field", field_s)->capture_default_str();
  qecc->add_option("--group", group_s)->required();
  qecc->add_option("--kind", kind_s, "euclidean, hermitian, symplectic or symplectic-pair")
      ->capture_default_str();
  qecc->add_option("--element", element_s)->required();
  qecc->add_option("--element-b", element_b_s, "Second element for symplectic-pair");
  add_distance_flags(qecc, dist);

  std::uint32_t l = 0, m = 0;
  std::string q_s = "2", g_s;
  auto *twod = app.add_subcommand("twod", "Principal 2D-cyclic code <g> and its C*");
  twod->add_option("--q", q_s, "Field order or field spec")->capture_default_str();
  twod->add_option("--l", l)->required();
  twod->add_option("--m", m)->required();
  twod->add_option("--g", g_s, "Generator polynomial, e.g. x4y4 + x3 + 1")->required();
  add_distance_flags(twod, dist);
  dist.samples = 0;

  SearchConfig scfg;
  std::string mode_s = "exhaustive-by-weight";
  bool timestamp = false;
  auto *search = app.add_subcommand("search", "Search for self-orthogonal elements");
  search->add_option("--field", scfg.field)->capture_default_str();
  search->add_option("--group", scfg.group)->required();
  search->add_option("--kind", kind_s)->capture_default_str();
  search->add_option("--mode", mode_s, "exhaustive-by-weight or random")->capture_default_str();
  search->add_option("--max-weight", scfg.max_weight)->capture_default_str();
  auto *seed_opt = search->add_option("--seed", scfg.seed, "Required in random mode");
  search->add_option("--budget", scfg.budget, "Candidates to evaluate")->capture_default_str();
  search->add_option("--distance-budget", scfg.distance_budget)->capture_default_str();
  search->add_flag("--timestamp", timestamp, "Stamp each record with the run start time");

  auto *ftable = app.add_subcommand("field-table", "Elements and tables of a field");
  ftable->add_option("--field", field_s)->capture_default_str();

  auto *gtable = app.add_subcommand("group-table", "Listing and multiplication table");
  gtable->add_option("--group", group_s)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*code) {
      auto field = parse_field(field_s);
      auto group = build_group(group_s);
      auto a = parse_element(field, group, element_s);
      LinearCode c(sigma(a));
      json out = {{"field", field->spec_string()},
                  {"group", group->description()},
                  {"element", to_string(a)}};
      if (c.dimension() == 0) {
        out.update(json{{"n", c.length()}, {"k", 0}, {"d", nullptr}, {"metric", "hamming"},
                        {"exact", true}});
      } else {
        out.update(code_params(distance(c, dist, common.threads)));
      }
      if (show_matrix)
        out["generator"] = literal_matrix(sigma(a));
      emit(out);
      summary(common, "[" + std::to_string(c.length()) + ", " + std::to_string(c.dimension()) +
                          ", " + out["d"].dump() + "] code over " + field->spec_string());
      return kOk;
    }

    if (*qecc) {
      auto field = parse_field(field_s);
      auto group = build_group(group_s);
      const OrthoKind kind = parse_ortho_kind(kind_s);
      auto a = parse_element(field, group, element_s);
      OrthoCertificate cert;
      Matrix gen = sigma(a);
      json out = {{"field", field->spec_string()},
                  {"group", group->description()},
                  {"element", to_string(a)}};
      switch (kind) {
      case OrthoKind::Euclidean:
        cert = check_euclidean(a);
        break;
      case OrthoKind::Hermitian:
        cert = check_hermitian(a);
        break;
      case OrthoKind::Symplectic:
        cert = check_symplectic(a);
        break;
      case OrthoKind::SymplecticPair: {
        if (element_b_s.empty())
          throw ParseError("symplectic-pair needs --element-b", 0);
        auto b = parse_element(field, group, element_b_s);
        out["element_b"] = to_string(b);
        cert = check_symplectic_pair(a, b);
        gen = hconcat(gen, sigma(b));
        break;
      }
      }
      out["certificate"] = certificate_json(cert);
      if (!cert.holds) {
        emit(out);
        summary(common, "certificate failed: " + cert.identity + " is nonzero");
        return kCertificate;
      }
      const QeccParams q = derive_qecc(LinearCode(std::move(gen)), cert,
                                       dist.options(common.threads));
      out.update(qecc_json(q));
      emit(out);
      summary(common, "[[" + std::to_string(q.n) + ", " + std::to_string(q.k) + ", " +
                          std::to_string(q.d) + "]]_" + std::to_string(q.base_q) + " from " +
                          to_string(kind) + " construction");
      return kOk;
    }

    if (*twod) {
      auto field = q_s.find('(') == std::string::npos ? parse_field("GF(" + q_s + ")")
                                                      : parse_field(q_s);
      auto g = parse_poly(field, g_s);
      json out = {{"q", field->order()}, {"l", l}, {"m", m}, {"g", to_string(g)}};
      const BivarPoly F = BivarPoly::x_y_cyclic(field, l, m);
      const bool fits = !g.is_zero() && g.degree().first < l && g.degree().second < m;
      out["divides"] = fits && divides(g, F);
      if (!out["divides"].get<bool>()) {
        emit(out);
        summary(common, "g does not divide (x^l - 1)(y^m - 1) within the l x m bounds");
        return kOk;
      }
      const TwoDCode c = code_from_g(l, m, g);
      json cj = {c.code.length(), c.code.dimension()};
      DistanceOptions dopt = dist.options(common.threads);
      dopt.random_fallback = false;
      try {
        if (c.code.dimension() > 0)
          cj.push_back(min_weight(c.code, {Metric::Hamming, nullptr, dopt.budget, dopt.threads}).d);
      } catch (const BudgetExceeded &) {
        if (dist.samples > 0) {
          RandomWeightOptions r;
          r.seed = dist.seed;
          r.samples = dist.samples;
          r.target = dist.target;
          r.threads = common.threads;
          std::uint64_t used = 0;
          out["C_d_upper_bound"] = min_weight_random(c.code, r, &used).d;
          out["C_d_samples"] = used;
        }
      }
      out["C"] = cj;
      out["formula_dimension"] = c.formula_dimension;
      out["ideal_dimension"] = c.ideal_dimension;
      json warnings = c.warnings;
      if (c.code.dimension() > 0) {
        const DualStar ds = dual_star(l, m, g);
        out["h"] = to_string(ds.h);
        out["h_star"] = to_string(ds.h_star);
        json sj = {ds.code.code.length(), ds.code.code.dimension()};
        try {
          if (ds.code.code.dimension() > 0)
            sj.push_back(
                min_weight(ds.code.code, {Metric::Hamming, nullptr, dopt.budget, dopt.threads}).d);
        } catch (const BudgetExceeded &) {
        }
        out["Cstar"] = sj;
        for (const auto &w : ds.code.warnings)
          warnings.push_back("C*: " + w);
        out["g_g_star"] = to_string(g * reciprocal(g));
        const TwoDVerdict v = check_dual_containing(l, m, g);
        out["dual_containing"] = v.algebraic;
        out["dual_containing_rows"] = v.matrix;
        if (v.algebraic && !v.matrix)
          warnings.push_back("g g* divides F but C* is not inside C");
        const TwoDVerdict so = check_self_orthogonal(l, m, g);
        out["self_orthogonal"] = so.algebraic;
        out["self_orthogonal_rows"] = so.matrix;
        if (so.algebraic && !so.matrix)
          warnings.push_back("F divides g g* but G G^T is nonzero");
      } else {
        out["Cstar"] = nullptr;
        out["dual_containing"] = nullptr;
        out["self_orthogonal"] = nullptr;
      }
      out["warnings"] = warnings;
      emit(out);
      summary(common, "C = " + out["C"].dump() + ", C* = " + out["Cstar"].dump());
      return kOk;
    }

    if (*search) {
      scfg.kind = parse_ortho_kind(kind_s);
      scfg.mode = parse_search_mode(mode_s);
      if (scfg.mode == SearchMode::Random && seed_opt->count() == 0)
        throw ParseError("random search needs --seed", 0);
      scfg.threads = common.threads;
      const std::string hash = config_hash(scfg);
      const std::string stamp = timestamp ? iso_timestamp() : "";
      const SearchResult res = run_search(scfg);
      for (const auto &r : res.records) {
        json j = {{"config_hash", hash}, {"index", r.index}, {"element", r.element}};
        if (!r.element_b.empty())
          j["element_b"] = r.element_b;
        j["certificate"] = to_string(scfg.kind);
        j["classical"] = {{"n", r.qecc.classical.n},
                          {"k", r.qecc.classical.k},
                          {"d", r.qecc.classical.d},
                          {"exact", r.qecc.classical.exact}};
        j["qecc"] = qecc_json(r.qecc);
        if (timestamp)
          j["timestamp"] = stamp;
        emit(j);
      }
      summary(common, std::to_string(res.candidates) + " candidates, " +
                          std::to_string(res.certified) + " certified, " +
                          std::to_string(res.records.size()) + " records, " +
                          std::to_string(res.skipped) + " over distance budget");
      return kOk;
    }

    if (*ftable) {
      auto field = parse_field(field_s);
      const Field &f = *field;
      json elems = json::array();
      for (std::uint32_t i = 0; i < f.order(); ++i) {
        const Element e = f.element(i);
        const auto lg = f.log(e);
        elems.push_back({{"rep", i},
                         {"literal", f.to_literal(e)},
                         {"coords", f.coords(e)},
                         {"log", lg ? json(*lg) : json(nullptr)},
                         {"frobenius", f.to_literal(f.frobenius(e))}});
      }
      json out = {{"field", f.spec_string()}, {"p", f.characteristic()}, {"k", f.degree()},
                  {"q", f.order()},          {"modulus", f.modulus()},    {"primitive", f.to_literal(f.primitive())},
                  {"elements", elems}};
      if (f.order() <= 64) {
        json add = json::array(), mul = json::array();
        for (std::uint32_t i = 0; i < f.order(); ++i) {
          json ra = json::array(), rm = json::array();
          for (std::uint32_t j = 0; j < f.order(); ++j) {
            ra.push_back(f.to_literal(f.add(f.element(i), f.element(j))));
            rm.push_back(f.to_literal(f.mul(f.element(i), f.element(j))));
          }
          add.push_back(ra);
          mul.push_back(rm);
        }
        out["add"] = add;
        out["mul"] = mul;
      }
      emit(out);
      summary(common, f.spec_string() + " with primitive element " + f.to_literal(f.primitive()));
      return kOk;
    }

    if (*gtable) {
      auto group = build_group(group_s);
      const GroupTable &g = *group;
      json words = json::array(), inv = json::array(), mul = json::array(), gens = json::array();
      for (std::size_t i = 0; i < g.order(); ++i) {
        words.push_back(g.word(i));
        inv.push_back(g.inverse(i) + 1);
        json row = json::array();
        for (std::size_t j = 0; j < g.order(); ++j)
          row.push_back(g.mul(i, j) + 1);
        mul.push_back(row);
      }
      for (const auto &gen : g.generators())
        gens.push_back({{"name", gen.name}, {"index", gen.index + 1}});
      emit({{"group", g.description()},
            {"order", g.order()},
            {"identity", g.identity() + 1},
            {"elements", words},
            {"generators", gens},
            {"inverse", inv},
            {"mul", mul}});
      summary(common, g.description() + " of order " + std::to_string(g.order()));
      return kOk;
    }
  } catch (const ParseError &e) {
    emit({{"error", e.what()}, {"kind", "parse"}, {"position", e.position()}});
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const CertificateFailed &e) {
    emit({{"error", e.what()}, {"kind", "certificate"}});
    std::cerr << "certificate failed: " << e.what() << "\n";
    return kCertificate;
  } catch (const BudgetExceeded &e) {
    emit({{"error", e.what()}, {"kind", "budget"}});
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error &e) {
    emit({{"error", e.what()}, {"kind", "input"}});
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
