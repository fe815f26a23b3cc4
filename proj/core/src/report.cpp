#include "sgchain/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "sgchain/errors.hpp"
#include "sgchain/green.hpp"
#include "sgchain/ideals.hpp"

namespace sgchain {

namespace {

using json = nlohmann::ordered_json;

json labels_of(FiniteSemigroup const& s, ElementSet const& x) {
  json out = json::array();
  x.for_each([&](element a) { out.push_back(s.label(a)); });
  return out;
}

json classes_json(FiniteSemigroup const& s, Partition const& p) {
  json out = json::array();
  for (auto const& cls : p.classes) out.push_back(labels_of(s, cls));
  return out;
}

json poset_json(Poset const& p) {
  json below = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.lt(j, i)) row.push_back(j);
    }
    below.push_back(std::move(row));
  }
  return below;
}

json green_json(FiniteSemigroup const& s, GreenStructure const& g) {
  json out;
  out["r_classes"] = classes_json(s, g.r);
  out["l_classes"] = classes_json(s, g.l);
  out["j_classes"] = classes_json(s, g.j);
  out["h_classes"] = classes_json(s, g.h);
  out["d_classes"] = classes_json(s, g.d);
  out["r_class_strictly_below"] = poset_json(g.r_poset);
  return out;
}

json clauses_json(std::vector<ClauseVerdict> const& clauses) {
  json out = json::array();
  for (auto const& c : clauses) {
    json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    if (!c.pass) item["witness"] = c.witness;
    out.push_back(std::move(item));
  }
  return out;
}

json socle_json(FiniteSemigroup const& s, SocleReport const& rep) {
  json out;
  out["side"] = rep.side == Side::Right ? "right" : "left";
  out["sigma"] = labels_of(s, rep.sigma);
  out["null_part"] = labels_of(s, rep.null_part);
  out["globally_idempotent_part"] = labels_of(s, rep.gi_part);
  json blocks = json::array();
  for (auto const& b : rep.blocks) blocks.push_back(labels_of(s, b));
  out["blocks"] = std::move(blocks);
  out["clauses"] = clauses_json(rep.clauses);
  return out;
}

std::string tri_string(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

json classify_json(StructureReport const& rep) {
  json out;
  out["is_null"] = tri_string(rep.is_null);
  out["is_right_simple"] = rep.is_right_simple;
  out["is_left_simple"] = rep.is_left_simple;
  out["is_simple"] = rep.is_simple;
  out["is_right_0_simple"] = tri_string(rep.is_right_0_simple);
  out["is_0_simple"] = tri_string(rep.is_0_simple);
  out["is_completely_simple"] = rep.is_completely_simple;
  out["is_completely_0_simple"] = tri_string(rep.is_completely_0_simple);
  out["is_semisimple"] = rep.is_semisimple;
  out["is_regular"] = rep.is_regular;
  json w;
  for (auto const& [k, v] : rep.witnesses) w[k] = v;
  out["witnesses"] = std::move(w);
  return out;
}

json ideal_list(FiniteSemigroup const& s, std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end());
  json out = json::array();
  for (auto const& i : sets) out.push_back(labels_of(s, i));
  return out;
}

json header(std::string const& command, std::string const& name) {
  json out;
  out["schema"] = 1;
  out["command"] = command;
  out["instance"] = name;
  return out;
}

}  // namespace

std::string analyze_report(InstanceSpec const& spec,
                           std::string const& instance_name) {
  FiniteSemigroup const s = resolve_finite(spec);
  GreenStructure const g = compute_green(s);
  json out = header("analyze", instance_name);
  out["size"] = s.size();
  out["labels"] = s.labels();
  out["zero"] = s.zero() ? json(s.label(*s.zero())) : json(nullptr);
  out["identity"] = s.identity() ? json(s.label(*s.identity())) : json(nullptr);
  out["green"] = green_json(s, g);
  json ideals;
  ideals["minimal_right"] = ideal_list(s, minimal_right_ideals(s));
  ideals["minimal_left"] = ideal_list(s, minimal_left_ideals(s));
  ideals["kernel"] = labels_of(s, kernel(s));
  if (s.zero()) {
    ideals["zero_minimal_right"] = ideal_list(s, zero_minimal_right_ideals(s));
    ideals["zero_minimal_left"] = ideal_list(s, zero_minimal_left_ideals(s));
    ideals["zero_minimal_two_sided"] = ideal_list(s, zero_minimal_ideals(s));
  }
  out["ideals"] = std::move(ideals);
  if (s.zero()) {
    out["socle_right"] = socle_json(s, socle(s, Side::Right));
    out["socle_left"] = socle_json(s, socle(s, Side::Left));
  } else {
    out["socle_right"] = nullptr;
    out["socle_left"] = nullptr;
  }
  out["classify"] = classify_json(classify(s));
  return out.dump(2) + "\n";
}

std::string green_report(InstanceSpec const& spec,
                         std::string const& instance_name) {
  FiniteSemigroup const s = resolve_finite(spec);
  json out = header("green", instance_name);
  out["size"] = s.size();
  out["green"] = green_json(s, compute_green(s));
  return out.dump(2) + "\n";
}

std::string socle_report_json(InstanceSpec const& spec,
                              std::string const& instance_name, Side side) {
  FiniteSemigroup const s = resolve_finite(spec);
  if (!s.zero()) {
    throw SemanticError("socle requires an instance with zero");
  }
  json out = header("socle", instance_name);
  out["socle"] = socle_json(s, socle(s, side));
  return out.dump(2) + "\n";
}

namespace {

json certificate_json(ExplorableSemigroup const& backend,
                      Certificate const& cert) {
  json out;
  out["kind"] = cert.kind == CertKind::Antichain ? "antichain"
                                                 : "ascending-chain";
  out["basis"] =
      cert.basis == VerdictBasis::Exact ? "exact" : "bounded-search";
  out["checked_bound"] = cert.checked_bound;
  json elems = json::array();
  for (auto const& e : cert.elements) elems.push_back(backend.display(e));
  out["elements"] = std::move(elems);
  out["validated"] = validate_certificate(backend, cert);
  return out;
}

json search_json(ExplorableSemigroup const& backend, SearchResult const& res,
                 std::string const& kind, std::size_t target) {
  json out;
  out["search"] = kind;
  out["target"] = target;
  out["radius"] = res.radius;
  if (res.found()) {
    out["found"] = true;
    out["certificate"] = certificate_json(backend, *res.certificate);
  } else {
    out["found"] = false;
    out["not_found_up_to"] = res.radius;
  }
  return out;
}

}  // namespace

std::string chains_report(InstanceSpec const& spec,
                          std::string const& instance_name,
                          ChainsOptions const& options) {
  json out = header("chains", instance_name);
  json searches = json::array();
  if (std::holds_alternative<ReesZPayload>(spec.payload)) {
    SymbolicReesZ const sym =
        std::get<SymbolicReesZ>(resolve(spec));
    auto backend = rees_z_backend(sym);
    out["backend"] = "symbolic-rees";
    std::size_t const radius = options.radius_magnitude;
    if (options.antichain_target) {
      searches.push_back(search_json(
          *backend,
          antichain_certificate(*backend, *options.antichain_target, radius),
          "antichain", *options.antichain_target));
      for (std::size_t row = 0; row < sym.i_count; ++row) {
        auto row_backend = rees_z_row_backend(sym, row);
        json s = search_json(
            *row_backend,
            antichain_certificate(*row_backend, *options.antichain_target,
                                  radius),
            "antichain", *options.antichain_target);
        s["within_row"] = row + 1;
        searches.push_back(std::move(s));
      }
    }
    if (options.chain_target) {
      searches.push_back(search_json(
          *backend,
          ascending_chain_certificate(*backend, *options.chain_target, radius),
          "chain", *options.chain_target));
    }
    json rows = json::array();
    for (std::size_t row = 0; row < sym.i_count; ++row) {
      ZeroMinRightIdealReport const rep = zero_min_right_ideal_report(
          sym, row, options.antichain_target.value_or(10));
      json r;
      r["row"] = row + 1;
      r["annihilator"] =
          rep.infinite ? json("infinite") : json(rep.annihilator_size);
      if (rep.certificate) {
        auto row_backend = rees_z_row_backend(sym, row);
        r["certificate"] = certificate_json(*row_backend, *rep.certificate);
      }
      rows.push_back(std::move(r));
    }
    out["zero_minimal_right_ideal_reports"] = std::move(rows);
  } else if (std::holds_alternative<PresentationPayload>(spec.payload)) {
    FpSemigroup fp = std::get<FpSemigroup>(resolve(spec));
    out["backend"] = "presentation";
    bool completed_here = false;
    if (!fp.confluent()) {
      CompletionResult res = knuth_bendix(fp.rs());
      if (!res.completed()) {
        throw SemanticError(
            "presentation is not confluent and completion gave up");
      }
      fp = FpSemigroup::analyze(std::move(res.system));
      completed_here = true;
    }
    out["completed_by_knuth_bendix"] = completed_here;
    std::size_t const radius = options.radius_words;
    std::function<bool(Word const&)> filter;
    if (options.kernel_only) {
      filter = uses_non_initial_letter;
      out["filter"] = "kernel-only";
    }
    auto backend = fp_backend(fp, radius, filter);
    if (options.antichain_target) {
      if (options.kernel_only && is_example_41_presentation(fp)) {
        Certificate const cert =
            kernel_antichain_41(*options.antichain_target, radius);
        json s;
        s["search"] = "antichain";
        s["target"] = *options.antichain_target;
        s["radius"] = radius;
        s["found"] = true;
        s["method"] = "kernel-family";
        s["certificate"] = certificate_json(*backend, cert);
        searches.push_back(std::move(s));
      } else {
        searches.push_back(search_json(
            *backend,
            antichain_certificate(*backend, *options.antichain_target, radius),
            "antichain", *options.antichain_target));
      }
    }
    if (options.chain_target) {
      searches.push_back(search_json(
          *backend,
          ascending_chain_certificate(*backend, *options.chain_target, radius),
          "chain", *options.chain_target));
    }
  } else {
    FiniteSemigroup const s = resolve_finite(spec);
    auto backend = finite_backend(s);
    out["backend"] = "finite";
    std::size_t const radius = s.size();
    if (options.antichain_target) {
      searches.push_back(search_json(
          *backend,
          antichain_certificate(*backend, *options.antichain_target, radius),
          "antichain", *options.antichain_target));
    }
    if (options.chain_target) {
      searches.push_back(search_json(
          *backend,
          ascending_chain_certificate(*backend, *options.chain_target, radius),
          "chain", *options.chain_target));
    }
  }
  out["searches"] = std::move(searches);
  return out.dump(2) + "\n";
}

std::string rewrite_report(InstanceSpec const& spec,
                           std::string const& instance_name,
                           RewriteOptions const& options) {
  if (!std::holds_alternative<PresentationPayload>(spec.payload)) {
    throw SemanticError("rewrite commands need a presentation instance");
  }
  FpSemigroup fp = std::get<FpSemigroup>(resolve(spec));
  json out = header("rewrite", instance_name);
  json rules = json::array();
  for (auto const& [lhs, rhs] : fp.rs().rules()) {
    rules.push_back({fp.rs().display(lhs), fp.rs().display(rhs)});
  }
  out["rules"] = std::move(rules);
  out["locally_confluent"] = fp.confluent();
  if (options.reduce_word) {
    Word const w = fp.rs().parse(*options.reduce_word);
    out["reduce"] = {{"word", fp.rs().display(w)},
                     {"reduced", fp.rs().display(reduce(fp.rs(), w))}};
  }
  if (options.complete) {
    CompletionResult res = knuth_bendix(fp.rs());
    json comp;
    comp["status"] = res.completed() ? "completed" : "gave-up";
    json crules = json::array();
    for (auto const& [lhs, rhs] : res.system.rules()) {
      crules.push_back({res.system.display(lhs), res.system.display(rhs)});
    }
    comp["rules"] = std::move(crules);
    comp["locally_confluent"] = is_locally_confluent(res.system).confluent;
    out["completion"] = std::move(comp);
    if (res.completed()) fp = FpSemigroup::analyze(std::move(res.system));
  }
  if (options.normal_forms) {
    if (!fp.confluent()) {
      CompletionResult res = knuth_bendix(fp.rs());
      if (!res.completed()) {
        throw SemanticError(
            "normal forms need a confluent system and completion gave up");
      }
      fp = FpSemigroup::analyze(std::move(res.system));
    }
    auto const nfs = enumerate_normal_forms(fp, *options.normal_forms);
    json levels = json::array();
    for (std::size_t n = 1; n < nfs.size(); ++n) {
      json level;
      level["length"] = n;
      level["count"] = nfs[n].size();
      json words = json::array();
      for (auto const& w : nfs[n]) words.push_back(fp.rs().display(w));
      level["words"] = std::move(words);
      levels.push_back(std::move(level));
    }
    out["normal_forms"] = std::move(levels);
  }
  return out.dump(2) + "\n";
}

}  // namespace sgchain
