#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "towerset/common.hpp"
#include "towerset/gentower.hpp"
#include "towerset/hilbert_burch.hpp"
#include "towerset/json_io.hpp"
#include "towerset/monomial.hpp"
#include "towerset/pointset.hpp"
#include "towerset/random_gen.hpp"
#include "towerset/resolution.hpp"
#include "towerset/suites.hpp"

namespace {

using tws::Json;

// options shared across leaves; only the chosen leaf writes into them
struct Args {
  std::string in;
  std::string degrees;
  std::string out;
  std::string format = "json";
  bool compact = false;
  bool brute = false;
  int threads = 1;
  int engine = 0;
  int cap = 14;
  int max_symbols = 9;
  int max_pairs = 12;
  int tau_scope = 0;
  int size = 0;
  int width = 2;
  std::uint64_t seed = 0;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  tws::require(f.good(), "BadFile", "cannot open output path " + path);
  f << text;
}

// merge the payload into the hash envelope and print it
void emit(const Args& a, const std::string& raw, Json payload) {
  Json env = tws::report_envelope(raw);
  env.update(payload);
  write_text(a.out, tws::dump_json(env, a.compact));
}

// tabular reports get the envelope as leading comment lines
void emit_tsv(const Args& a, const std::string& raw, const std::string& table) {
  Json env = tws::report_envelope(raw);
  std::string text = "# schema_version\t" + env["schema_version"].get<std::string>() +
                     "\n# input_hash\t" + env["input_hash"].get<std::string>() + "\n" + table;
  write_text(a.out, text);
}

Json h_payload(const std::vector<long long>& h, long long degree) {
  Json j;
  j["h"] = h;
  j["degree"] = degree;
  return j;
}

tws::SearchOptions search_options(const Args& a) {
  tws::SearchOptions s;
  s.threads = a.threads;
  s.max_symbols = a.max_symbols;
  s.max_pairs = a.max_pairs;
  s.decomposition_cap = a.cap;
  s.tau_scope = a.tau_scope;
  return s;
}

void add_output_flags(CLI::App* cmd, Args& a) {
  cmd->add_option("-o,--out", a.out, "write the report here instead of stdout");
  cmd->add_flag("--compact", a.compact, "single line JSON");
}

void add_format_flag(CLI::App* cmd, Args& a) {
  cmd->add_option("--format", a.format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
}

void add_search_flags(CLI::App* cmd, Args& a) {
  cmd->add_option("--max-symbols", a.max_symbols, "symbol cap for relabeling searches");
  cmd->add_option("--max-pairs", a.max_pairs, "pair cap for relabeling searches");
  cmd->add_option("--tau-scope", a.tau_scope,
                  "0 per-definition scope, 1 all symbols, 2 second coordinates only")
      ->check(CLI::Range(0, 2));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for tower sets and codimension two squarefree monomial ideals"};
  app.require_subcommand(1);
  Args a;
  int code = 0;

  auto* tower = app.add_subcommand("tower", "tower set operations");
  tower->require_subcommand(1);
  auto* tcheck = tower->add_subcommand("check", "test the nested slice property");
  tcheck->add_option("input", a.in, "point set file")->required();
  add_output_flags(tcheck, a);
  tcheck->callback([&] {
    std::string raw;
    tws::PointSet s = tws::point_set_from_json(tws::load_json_file(a.in, &raw));
    bool ok = tws::is_tower_set(s);
    emit(a, raw, Json{{"tower", ok}, {"points", s.pts.size()}});
    code = ok ? 0 : 1;
  });

  auto* thash = tower->add_subcommand("hash", "sigma image of a tower set");
  thash->add_option("input", a.in, "point set file")->required();
  add_output_flags(thash, a);
  thash->callback([&] {
    std::string raw;
    tws::PointSet s = tws::point_set_from_json(tws::load_json_file(a.in, &raw));
    tws::require(tws::is_tower_set(s), "NotTowerSet", "hash needs a tower set");
    emit(a, raw, Json{{"hash", tws::to_json(tws::sigma_hash(s))}});
  });

  auto* thf = tower->add_subcommand("hf", "h vector of a tower scheme");
  thf->add_option("input", a.in, "point set file")->required();
  thf->add_option("--degrees", a.degrees, "degree table file; all ones when absent");
  add_output_flags(thf, a);
  add_format_flag(thf, a);
  thf->callback([&] {
    std::string raw;
    tws::PointSet s = tws::point_set_from_json(tws::load_json_file(a.in, &raw));
    tws::require(tws::is_tower_set(s), "NotTowerSet", "h vector needs a tower set");
    tws::DegreeTable d;
    if (a.degrees.empty()) {
      d = tws::all_ones_table(tws::segment_size(tws::sigma_hash(s)));
    } else {
      std::string raw2;
      d = tws::degree_table_from_json(tws::load_json_file(a.degrees, &raw2));
      raw += "\n" + raw2;
    }
    auto h = tws::tower_h_vector(s, d);
    long long deg = std::accumulate(h.begin(), h.end(), 0ll);
    if (a.format == "tsv")
      emit_tsv(a, raw, tws::vector_tsv(h));
    else
      emit(a, raw, h_payload(h, deg));
  });

  auto* segment = app.add_subcommand("segment", "left segment operations");
  segment->require_subcommand(1);
  auto* shvec = segment->add_subcommand("hvec", "level counts of a left segment");
  shvec->add_option("input", a.in, "point set file")->required();
  add_output_flags(shvec, a);
  add_format_flag(shvec, a);
  shvec->callback([&] {
    std::string raw;
    tws::PointSet l = tws::point_set_from_json(tws::load_json_file(a.in, &raw));
    tws::require(tws::is_left_segment(l), "NotLeftSegment", "input is not downward closed");
    auto h = tws::h_vector_of_segment(l);
    long long deg = std::accumulate(h.begin(), h.end(), 0ll);
    if (a.format == "tsv")
      emit_tsv(a, raw, tws::vector_tsv(h));
    else
      emit(a, raw, h_payload(h, deg));
  });

  auto* sscale = segment->add_subcommand("scale", "stretch a left segment by a degree table");
  sscale->add_option("input", a.in, "point set file")->required();
  sscale->add_option("--degrees", a.degrees, "degree table file")->required();
  add_output_flags(sscale, a);
  sscale->callback([&] {
    std::string raw, raw2;
    tws::PointSet l = tws::point_set_from_json(tws::load_json_file(a.in, &raw));
    tws::DegreeTable d = tws::degree_table_from_json(tws::load_json_file(a.degrees, &raw2));
    raw += "\n" + raw2;
    emit(a, raw, Json{{"segment", tws::to_json(tws::scale_segment(l, d))}});
  });

  auto* star = app.add_subcommand("star", "star configuration support");
  star->require_subcommand(1);
  auto* sgen = star->add_subcommand("gen", "emit the strictly decreasing support");
  sgen->add_option("--points", a.size, "number of points")->required();
  sgen->add_option("--width", a.width, "tuple width");
  add_output_flags(sgen, a);
  sgen->callback([&] {
    std::string raw = "star " + std::to_string(a.size) + " " + std::to_string(a.width);
    emit(a, raw, Json{{"star", tws::to_json(tws::star_configuration(a.size, a.width))}});
  });

  auto* ideal = app.add_subcommand("ideal", "squarefree monomial ideal operations");
  ideal->require_subcommand(1);
  auto* ibuild = ideal->add_subcommand("build", "canonical minimal generators");
  ibuild->add_option("input", a.in, "ideal file")->required();
  add_output_flags(ibuild, a);
  ibuild->callback([&] {
    std::string raw;
    tws::MonomialIdeal i = tws::ideal_from_json(tws::load_json_file(a.in, &raw));
    emit(a, raw, Json{{"ideal", tws::to_json(i)}});
  });

  auto* iprimes = ideal->add_subcommand("primes", "minimal primes and height");
  iprimes->add_option("input", a.in, "ideal file")->required();
  add_output_flags(iprimes, a);
  iprimes->callback([&] {
    std::string raw;
    tws::MonomialIdeal i = tws::ideal_from_json(tws::load_json_file(a.in, &raw));
    auto primes = tws::minimal_primes(i);
    auto he = tws::height_and_equidimensional(i);
    emit(a, raw,
         Json{{"primes", primes}, {"height", he.first}, {"equidimensional", he.second}});
  });

  auto* iacm = ideal->add_subcommand("acm", "graded Betti numbers and the Cohen-Macaulay test");
  iacm->add_option("input", a.in, "ideal file")->required();
  iacm->add_option("--threads", a.threads, "worker threads for the resolution");
  iacm->add_option("--engine", a.engine, "0 auto, 1 restriction, 2 nerve")
      ->check(CLI::Range(0, 2));
  add_output_flags(iacm, a);
  add_format_flag(iacm, a);
  iacm->callback([&] {
    std::string raw;
    tws::MonomialIdeal i = tws::ideal_from_json(tws::load_json_file(a.in, &raw));
    tws::ResolutionOptions ro;
    ro.threads = a.threads;
    ro.engine = a.engine;
    tws::BettiTable b = tws::betti_numbers(i, ro);
    auto he = tws::height_and_equidimensional(i);
    bool acm = he.second && b.pd == he.first;
    if (a.format == "tsv") {
      emit_tsv(a, raw, tws::betti_tsv(b));
    } else {
      emit(a, raw,
           Json{{"acm", acm},
                {"height", he.first},
                {"equidimensional", he.second},
                {"betti", tws::to_json(b)}});
    }
    code = acm ? 0 : 1;
  });

  auto* ihvec = ideal->add_subcommand("hvec", "h vector of a Cohen-Macaulay quotient");
  ihvec->add_option("input", a.in, "ideal file")->required();
  add_output_flags(ihvec, a);
  add_format_flag(ihvec, a);
  ihvec->callback([&] {
    std::string raw;
    tws::MonomialIdeal i = tws::ideal_from_json(tws::load_json_file(a.in, &raw));
    auto he = tws::height_and_equidimensional(i);
    auto hd = tws::h_vector_and_degree(i, he.first);
    if (a.format == "tsv") {
      emit_tsv(a, raw, tws::vector_tsv(hd.first));
    } else {
      Json j = h_payload(hd.first, hd.second);
      j["height"] = he.first;
      emit(a, raw, j);
    }
  });

  auto* gts = app.add_subcommand("gts", "generalized tower set operations");
  gts->require_subcommand(1);
  auto* gcheck = gts->add_subcommand("check", "validate a decomposition");
  gcheck->add_option("input", a.in, "decomposition file")->required();
  add_output_flags(gcheck, a);
  gcheck->callback([&] {
    std::string raw;
    tws::GTSDecomposition d = tws::gts_from_json(tws::load_json_file(a.in, &raw));
    tws::GtsFail why = tws::GtsFail::none;
    bool ok = tws::is_generalized_tower_set(d, &why);
    emit(a, raw, Json{{"valid", ok}, {"reason", ok ? "" : tws::gts_fail_name(why)}});
    code = ok ? 0 : 1;
  });

  auto* gfind = gts->add_subcommand("find", "split a point set into tower and extra rows");
  gfind->add_option("input", a.in, "point set file")->required();
  gfind->add_option("--cap", a.cap, "point cap for the decomposition search");
  add_output_flags(gfind, a);
  gfind->callback([&] {
    std::string raw;
    tws::PointSet s = tws::point_set_from_json(tws::load_json_file(a.in, &raw));
    auto d = tws::find_gts_decomposition(s, a.cap);
    Json j{{"found", d.has_value()}};
    if (d) j["decomposition"] = tws::to_json(*d);
    emit(a, raw, j);
    code = d ? 0 : 1;
  });

  auto* tz = app.add_subcommand("towerizable", "search for a relabeling onto a tower set");
  tz->add_option("input", a.in, "support file")->required();
  tz->add_flag("--brute", a.brute, "use the literal reference search");
  add_search_flags(tz, a);
  add_output_flags(tz, a);
  tz->callback([&] {
    std::string raw;
    tws::PrimeSupport u = tws::prime_support_from_json(tws::load_json_file(a.in, &raw));
    auto opts = search_options(a);
    auto w = a.brute ? tws::is_towerizable_brute(u, opts) : tws::is_towerizable(u, opts);
    Json j{{"towerizable", w.has_value()},
           {"conclusion", w ? "towerizable" : "not towerizable"}};
    if (w) j["witness"] = tws::to_json(*w);
    emit(a, raw, j);
    code = w ? 0 : 1;
  });

  auto* gtz = app.add_subcommand("gen-towerizable",
                                 "search for a relabeling onto a generalized tower set");
  gtz->add_option("input", a.in, "support file")->required();
  gtz->add_option("--cap", a.cap, "point cap for the decomposition search");
  add_search_flags(gtz, a);
  add_output_flags(gtz, a);
  gtz->callback([&] {
    std::string raw;
    tws::PrimeSupport u = tws::prime_support_from_json(tws::load_json_file(a.in, &raw));
    auto w = tws::is_generalized_towerizable(u, search_options(a));
    Json j{{"generalized_towerizable", w.has_value()},
           {"conclusion", w ? "generalized towerizable" : "not generalized towerizable"}};
    if (w) {
      j["witness"] = tws::to_json(w->w);
      j["decomposition"] = tws::to_json(w->decomp);
    }
    emit(a, raw, j);
    code = w ? 0 : 1;
  });

  auto* hb = app.add_subcommand("hb", "Hilbert-Burch matrix operations");
  hb->require_subcommand(1);
  auto* hsf = hb->add_subcommand("standard-form", "extract the matrix of an acm ideal");
  hsf->add_option("input", a.in, "ideal file")->required();
  add_output_flags(hsf, a);
  hsf->callback([&] {
    std::string raw;
    tws::MonomialIdeal i = tws::ideal_from_json(tws::load_json_file(a.in, &raw));
    tws::StandardFormMatrix m = tws::standard_form_from_ideal(i);
    emit(a, raw, Json{{"matrix", tws::to_json(m)}});
  });

  auto* htow = hb->add_subcommand("towerize", "pair structure carried by a matrix");
  htow->add_option("input", a.in, "matrix file")->required();
  add_output_flags(htow, a);
  htow->callback([&] {
    std::string raw;
    tws::StandardFormMatrix m = tws::matrix_from_json(tws::load_json_file(a.in, &raw));
    tws::USets us = tws::u_sets(m);
    tws::MuTable mu = tws::mu_table(m);
    tws::OrientResult o = tws::orient_and_sort(m);
    auto fams = tws::families_from_matrix(m, o.tau);
    tws::MonomialIdeal i = tws::ideal_from_matrix(m);
    tws::MonomialIdeal back =
        tws::generalized_tower_scheme_ideal(o.d, fams.first, fams.second, m.n);
    tws::check_invariant(tws::ideal_equal(i, back),
                         "matrix ideal differs from the decomposition ideal");
    emit(a, raw,
         Json{{"usets", tws::to_json(us)},
              {"mu", tws::to_json(mu)},
              {"orientation", tws::to_json(o)},
              {"F1", tws::to_json(fams.first)},
              {"F2", tws::to_json(fams.second)},
              {"ideal", tws::to_json(i)}});
  });

  auto* verify = app.add_subcommand("verify", "theorem-level verification");
  verify->require_subcommand(1);
  auto* vchar = verify->add_subcommand("characterization", "full dichotomy pipeline");
  vchar->add_option("input", a.in, "ideal file")->required();
  vchar->add_option("--threads", a.threads, "worker threads");
  vchar->add_option("--cap", a.cap, "point cap for the decomposition search");
  add_search_flags(vchar, a);
  add_output_flags(vchar, a);
  vchar->callback([&] {
    std::string raw;
    tws::MonomialIdeal i = tws::ideal_from_json(tws::load_json_file(a.in, &raw));
    tws::CharacterizationReport rep = tws::verify_characterization(i, search_options(a));
    emit(a, raw, tws::to_json(rep));
    code = rep.acm ? 0 : 1;
  });

  auto* selftest = app.add_subcommand("selftest", "run the theorem property suites");
  selftest->add_option("--seed", a.seed, "seed for the randomized suites");
  add_output_flags(selftest, a);
  selftest->callback([&] {
    auto suites = tws::run_all_suites(a.seed);
    bool all = true;
    Json list = Json::array();
    for (const auto& s : suites) {
      all = all && s.pass;
      list.push_back(Json{{"name", s.name},
                          {"pass", s.pass},
                          {"cases", s.cases},
                          {"detail", s.detail}});
      std::cerr << (s.pass ? "pass " : "FAIL ") << s.name << " cases=" << s.cases;
      if (s.seconds > 0) std::cerr << " (" << s.seconds << "s)";
      if (!s.detail.empty()) std::cerr << " " << s.detail;
      std::cerr << "\n";
    }
    std::string raw = "selftest " + std::to_string(a.seed);
    emit(a, raw, Json{{"seed", a.seed}, {"pass", all}, {"suites", list}});
    code = all ? 0 : 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? 0 : 2;
  } catch (const tws::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tws::invariant_error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }
  return code;
}
