#include <sstream>

#include "bedard/cli.hpp"
#include "bedard/error.hpp"
#include "bedard/flagbrute.hpp"
#include "bedard/pieces.hpp"

namespace bedard::cli {
namespace {

using ojson = nlohmann::ordered_json;

ojson subset_json(GenSet s) {
  ojson a = ojson::array();
  for (int i : s.indices()) a.push_back(i);
  return a;
}

ojson poly_json(const QPoly& p) {
  ojson a = ojson::array();
  for (auto c : p.coefficients()) a.push_back(c);
  return a;
}

ojson tseq_json(const Group& g, const std::vector<TStep>& steps) {
  ojson a = ojson::array();
  for (const auto& st : steps) a.push_back({{"J", subset_json(st.j)}, {"w", g.format(st.w)}});
  return a;
}

ojson sseq_json(const Group& g, const SSeq& s) {
  ojson a = ojson::array();
  for (const auto& st : s.steps)
    a.push_back({{"J", subset_json(st.j)}, {"J_prime", subset_json(st.j_prime)}, {"u", g.format(st.u)}});
  return a;
}

ojson header(const RunConfig& cfg) {
  std::string name;
  for (const auto& part : cfg.command) name += (name.empty() ? "" : " ") + part;
  return ojson{{"schema", kSchema}, {"command", name}};
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

std::shared_ptr<const Group> load_group(const RunConfig& cfg) { return Group::from_type(cfg.type, cfg.cap); }

std::vector<GenSet> subsets(const RunConfig& cfg, const Group& g) {
  if (!cfg.all_j) return {parse_gen_set(cfg.j, g.rank())};
  std::vector<GenSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.rank()); ++b) out.emplace_back(b);
  return out;
}

std::vector<Twist> twists(const RunConfig& cfg, const std::shared_ptr<const Group>& g) {
  if (cfg.all_twists) return Twist::diagram_automorphisms(g);
  return {Twist::parse(g, cfg.twist)};
}

Report run_group(const RunConfig& cfg) {
  const auto g = load_group(cfg);
  const auto rs = RootSystem::from_cartan_matrix(g->cartan_matrix());
  Report r;
  r.json = header(cfg);
  r.json["type"] = g->name();
  r.json["rank"] = g->rank();
  r.json["order"] = g->order();
  r.json["num_positive_roots"] = rs.num_positive();
  r.json["longest"] = g->format(g->longest());
  r.json["longest_length"] = g->length(g->longest());
  r.json["cartan_matrix"] = g->cartan_matrix();
  r.csv_header = {"key", "value"};
  r.csv_rows = {{"type", g->name()},
                {"rank", std::to_string(g->rank())},
                {"order", std::to_string(g->order())},
                {"num_positive_roots", std::to_string(rs.num_positive())},
                {"longest", g->format(g->longest())},
                {"longest_length", std::to_string(g->length(g->longest()))}};
  return r;
}

Report run_pieces(const RunConfig& cfg) {
  const auto g = load_group(cfg);
  const Twist eps = Twist::parse(g, cfg.twist);
  const auto datum = ReductiveDatum::from_group(g, cfg.torus_rank.value_or(g->rank()));
  Report r;
  r.json = header(cfg);
  r.json["type"] = g->name();
  r.json["twist"] = eps.label();
  r.json["torus_rank"] = datum.torus_rank;
  if (cfg.q) r.json["q"] = *cfg.q;
  r.csv_header = {"w", "J_inf", "N_t", "m_t", "dim", "count_poly"};
  if (cfg.q) r.csv_header.push_back("count_at_q");
  if (cfg.all_j) r.csv_header.push_back("J");

  ojson censuses = ojson::array();
  bool ok = true;
  for (GenSet j : subsets(cfg, *g)) {
    const Census c = census(j, eps, datum);
    ojson block;
    block["J"] = subset_json(j);
    block["variety_poly"] = poly_json(c.variety);
    if (cfg.q) block["variety_at_q"] = c.variety.evaluate(*cfg.q);
    ojson rows = ojson::array();
    for (const auto& row : c.rows) {
      ojson item{{"w", g->format(row.key.w)},
                 {"J_inf", subset_json(row.key.j_inf)},
                 {"steps", tseq_json(*g, row.key.steps)},
                 {"d", row.d},
                 {"N_t", row.n_t},
                 {"m_t", row.m_t},
                 {"dim", row.dim}};
      item["count_poly"] = row.count ? poly_json(*row.count) : ojson(nullptr);
      if (cfg.q) item["count_at_q"] = row.count ? ojson(row.count->evaluate(*cfg.q)) : ojson(nullptr);
      rows.push_back(std::move(item));
      std::vector<std::string> csv{g->format(row.key.w), format_gen_set(row.key.j_inf), std::to_string(row.n_t),
                                   std::to_string(row.m_t), std::to_string(row.dim),
                                   row.count ? row.count->to_list_string() : ""};
      if (cfg.q) csv.push_back(row.count ? std::to_string(row.count->evaluate(*cfg.q)) : "");
      if (cfg.all_j) csv.push_back(format_gen_set(j));
      r.csv_rows.push_back(std::move(csv));
    }
    block["pieces"] = std::move(rows);
    block["sum_check"] = c.sum_ok ? ojson(pass_fail(*c.sum_ok)) : ojson("SKIPPED");
    block["dim_bound_check"] = pass_fail(c.dim_bound_ok);
    block["euler_check"] = pass_fail(c.euler_ok);
    ok = ok && c.sum_ok.value_or(true) && c.dim_bound_ok && c.euler_ok;
    if (cfg.all_j) {
      censuses.push_back(std::move(block));
    } else {
      for (auto& [key, value] : block.items()) r.json[key] = value;
    }
  }
  if (cfg.all_j) r.json["censuses"] = std::move(censuses);
  r.exit_code = ok ? kPass : kVerifyFailed;
  return r;
}

Report run_psi(const RunConfig& cfg) {
  const auto g = load_group(cfg);
  const Twist eps = Twist::parse(g, cfg.twist);
  const GenSet j = parse_gen_set(cfg.j, g->rank());
  const Element w = g->parse(cfg.w);
  const SSeq s = psi(w, j, eps);
  const TSeq t = s_to_t(s, eps);
  const GenSet jinf = j_infinity(t, eps);
  const bool valid = !validate_s(s.steps, j, eps) && !validate_t(t.steps, j, eps) && phi(s, *g) == w;
  Report r;
  r.json = header(cfg);
  r.json["type"] = g->name();
  r.json["J"] = subset_json(j);
  r.json["twist"] = eps.label();
  r.json["w"] = g->format(w);
  r.json["sseq"] = sseq_json(*g, s);
  r.json["tseq"] = tseq_json(*g, t.steps);
  r.json["J_inf"] = subset_json(jinf);
  r.json["check"] = pass_fail(valid);
  r.csv_header = {"n", "J", "J_prime", "u", "w"};
  Element prefix = g->identity();
  for (std::size_t n = 0; n < s.steps.size(); ++n) {
    prefix = g->mul(prefix, s.steps[n].u);
    r.csv_rows.push_back({std::to_string(n), format_gen_set(s.steps[n].j), format_gen_set(s.steps[n].j_prime),
                          g->format(s.steps[n].u), g->format(prefix)});
  }
  r.exit_code = valid ? kPass : kVerifyFailed;
  return r;
}

Report run_phi(const RunConfig& cfg) {
  const auto g = load_group(cfg);
  const Twist eps = Twist::parse(g, cfg.twist);
  const GenSet j = parse_gen_set(cfg.j, g->rank());
  std::vector<Element> u;
  std::stringstream in(cfg.u);
  for (std::string part; std::getline(in, part, ';');) u.push_back(g->parse(part));
  const SSeq s = sseq_from_u(u, j, eps);
  const auto violation = validate_s(s.steps, j, eps);
  Report r;
  r.json = header(cfg);
  r.json["type"] = g->name();
  r.json["J"] = subset_json(j);
  r.json["twist"] = eps.label();
  r.json["sseq"] = sseq_json(*g, s);
  r.csv_header = {"key", "value"};
  if (violation) {
    r.json["violation"] = {{"axiom", violation->axiom}, {"index", violation->index}, {"detail", violation->detail}};
    r.json["check"] = "FAIL";
    r.csv_rows = {{"axiom", violation->axiom}, {"index", std::to_string(violation->index)}};
    r.exit_code = kVerifyFailed;
    return r;
  }
  const Element w = phi(s, *g);
  r.json["phi"] = g->format(w);
  r.json["check"] = "PASS";
  r.csv_rows = {{"phi", g->format(w)}};
  return r;
}

Report run_verify(const RunConfig& cfg) {
  const auto g = load_group(cfg);
  const std::string& what = cfg.command.at(1);
  const auto datum = ReductiveDatum::from_group(g, cfg.torus_rank.value_or(g->rank()));
  Report r;
  r.json = header(cfg);
  r.json["type"] = g->name();
  ojson failures = ojson::array();
  std::size_t checked = 0;
  r.csv_header = {"twist", "J", "result"};
  for (const Twist& eps : twists(cfg, g)) {
    for (GenSet j : subsets(cfg, *g)) {
      ++checked;
      std::string detail;
      if (what == "euler") {
        const auto n_pieces = enumerate_pieces(j, eps).size();
        const auto expected = g->enumerate_min_reps(GenSet{}, j).size();
        if (n_pieces != expected) detail = std::to_string(n_pieces) + " pieces, |W^J| = " + std::to_string(expected);
      } else if (what == "sum") {
        if (!eps.is_identity()) {
          r.csv_rows.push_back({eps.label(), format_gen_set(j), "SKIPPED"});
          continue;
        }
        const Census c = census(j, eps, datum);
        if (!c.sum_ok.value_or(false))
          detail = "sum " + c.piece_sum->to_string() + " != variety " + c.variety.to_string();
      } else {
        const GenSet ej = eps.twist_subset(j);
        for (Element w : g->enumerate_min_reps(ej, GenSet{})) {
          const SSeq s = psi(w, j, eps);
          const TSeq t = s_to_t(s, eps);
          if (phi(s, *g) != w || t_to_s(t, eps) != s || s_to_t(t_to_s(t, eps), eps) != t) {
            detail = "round trip fails at w = '" + g->format(w) + "'";
            break;
          }
        }
      }
      r.csv_rows.push_back({eps.label(), format_gen_set(j), detail.empty() ? "PASS" : "FAIL"});
      if (!detail.empty()) failures.push_back({{"twist", eps.label()}, {"J", subset_json(j)}, {"detail", detail}});
    }
  }
  r.json["checked"] = checked;
  r.json["failures"] = failures;
  r.json["result"] = pass_fail(failures.empty());
  r.exit_code = failures.empty() ? kPass : kVerifyFailed;
  return r;
}

Report run_z_census(const RunConfig& cfg) {
  const int n = *cfg.n;
  const int q = *cfg.q;
  const auto w_group = Group::from_type("A" + std::to_string(n - 1));
  const GenSet j = parse_gen_set(cfg.j, w_group->rank());
  ZCensusOptions options;
  options.budget = cfg.budget;
  const ZCensus c = z_census(n, q, j, options);
  const Twist eps = Twist::identity(w_group);
  const auto datum = ReductiveDatum::from_group(w_group, n);
  const auto keys = enumerate_pieces(j, eps);

  Report r;
  r.json = header(cfg);
  r.json["n"] = n;
  r.json["q"] = q;
  r.json["J"] = subset_json(j);
  r.json["total"] = c.total;
  r.csv_header = {"w", "count"};
  if (cfg.compare) r.csv_header.push_back("predicted");
  ojson pieces = ojson::array();
  bool match = c.pieces.size() == keys.size();
  for (const auto& piece : c.pieces) {
    const PieceKey* key = nullptr;
    for (const auto& k : keys)
      if (k.steps == piece.t.steps) key = &k;
    const Element w = key ? key->w : piece.t.steps.back().w;
    ojson item{{"w", w_group->format(w)}, {"steps", tseq_json(*w_group, piece.t.steps)}, {"count", piece.count}};
    std::vector<std::string> csv{w_group->format(w), std::to_string(piece.count)};
    if (cfg.compare) {
      std::optional<long long> predicted;
      if (key) predicted = piece_count_poly(*key, datum, eps).evaluate(q);
      item["predicted"] = predicted ? ojson(*predicted) : ojson(nullptr);
      csv.push_back(predicted ? std::to_string(*predicted) : "");
      match = match && predicted && *predicted == static_cast<long long>(piece.count);
    }
    pieces.push_back(std::move(item));
    r.csv_rows.push_back(std::move(csv));
  }
  r.json["pieces"] = std::move(pieces);
  r.json["orbits"] = *c.orbits;
  r.json["orbit_constant"] = *c.orbit_constant;
  r.json["fibres_checked"] = *c.fibres_checked;
  r.json["fibres_ok"] = *c.fibres_ok;
  r.json["sequences_valid"] = c.all_valid;
  bool ok = c.all_valid && *c.orbit_constant && *c.fibres_ok;
  if (cfg.compare) {
    const long long variety = variety_count_poly(j, datum).evaluate(q);
    match = match && variety == static_cast<long long>(c.total);
    r.json["predicted_total"] = variety;
    r.json["compare"] = pass_fail(match);
    ok = ok && match;
  }
  r.exit_code = ok ? kPass : kVerifyFailed;
  return r;
}

Report run_lines(const RunConfig& cfg) {
  const LineCensus c = gl_line_census(*cfg.n, *cfg.q, *cfg.m, cfg.budget);
  const auto w_group = Group::from_type("A" + std::to_string(*cfg.n - 1));
  Report r;
  r.json = header(cfg);
  r.json["n"] = c.n;
  r.json["q"] = c.q;
  r.json["m"] = c.m;
  r.json["lines"] = c.lines;
  ojson classes = ojson::array();
  r.csv_header = {"class", "count"};
  for (const auto& [j, count] : c.class_counts) {
    classes.push_back({{"j", j}, {"count", count}});
    r.csv_rows.push_back({"X_" + std::to_string(j), std::to_string(count)});
  }
  ojson pieces = ojson::array();
  for (const auto& [w, count] : c.piece_counts) pieces.push_back({{"w", w_group->format(w)}, {"count", count}});
  r.json["classes"] = std::move(classes);
  r.json["pieces"] = std::move(pieces);
  r.json["observed_pieces"] = c.observed_pieces();
  r.json["sequences_valid"] = c.all_valid;
  r.json["dictionary"] = pass_fail(c.dictionary_ok);
  r.exit_code = c.all_valid && c.dictionary_ok ? kPass : kVerifyFailed;
  return r;
}

Report run_sp_lines(const RunConfig& cfg) {
  const SpLineCensus c = sp_line_census(*cfg.n, *cfg.q, *cfg.m, cfg.budget);
  Report r;
  r.json = header(cfg);
  r.json["dim"] = 2 * c.half;
  r.json["q"] = c.q;
  r.json["m"] = c.m;
  r.json["lines"] = c.lines;
  ojson classes = ojson::array();
  r.csv_header = {"class", "count"};
  std::size_t total = 0;
  for (const auto& tag : sp_line_tags(c.half)) {
    const auto it = c.class_counts.find(tag);
    const std::size_t count = it == c.class_counts.end() ? 0 : it->second;
    total += count;
    classes.push_back({{"class", tag.tag()}, {"count", count}});
    r.csv_rows.push_back({tag.tag(), std::to_string(count)});
  }
  r.json["classes"] = std::move(classes);
  r.json["partition"] = pass_fail(total == c.lines);
  r.exit_code = total == c.lines ? kPass : kVerifyFailed;
  return r;
}

}  // namespace

Report run_command(const RunConfig& cfg) {
  const std::string& top = cfg.command.at(0);
  if (top == "group") return run_group(cfg);
  if (top == "pieces") return run_pieces(cfg);
  if (top == "bedard") return cfg.command.at(1) == "psi" ? run_psi(cfg) : run_phi(cfg);
  if (top == "verify") return run_verify(cfg);
  if (top == "oracle") {
    const std::string& sub = cfg.command.at(1);
    if (sub == "z-census") return run_z_census(cfg);
    if (sub == "lines") return run_lines(cfg);
    return run_sp_lines(cfg);
  }
  throw ParseError("unknown command " + top);
}

}  // namespace bedard::cli
