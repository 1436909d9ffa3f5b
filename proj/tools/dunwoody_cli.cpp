// Command-line front end for the Dunwoody diagram library.
//
// Subcommands:
//   check SIGMA       admissibility report
//   classify SIGMA    covering report (quotient class, degree, branch id)
//   word SIGMA        base word and cyclic presentation
//   homology SIGMA    first homology of the closed manifold
//   sweep             enumerate a box of 6-tuples
//   two-bridge A B    verify branched-cover homology against the knot oracle
//
// SIGMA is "a,b,c,n,r,s"; s may be the literal "auto", meaning s = -p*q mod n
// computed from the genus-one quotient (a,b,c,1,r,0).
//
// Exit codes: 0 = admissible / all checks passed, 1 = not admissible or a
// verification mismatch, 2 = parse/validation error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "dunwoody/dunwoody.hpp"

using json = nlohmann::ordered_json;
using namespace dunwoody;

namespace {

enum class Format { Table, Json, Csv };

Format parseFormat(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw CLI::ValidationError("--format must be one of table, json, csv");
}

int defaultJobs() {
  if (const char* env = std::getenv("DUNWOODY_JOBS")) {
    const long j = std::strtol(env, nullptr, 10);
    if (j >= 1) return static_cast<int>(j);
  }
  return 1;
}

// Parses "a,b,c,n,r,s" with optional s = "auto".
SixTuple parseSigma(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 6)
    throw std::invalid_argument("six-tuple must have exactly 6 entries: " +
                                text);
  auto num = [](const std::string& p) {
    size_t used = 0;
    const long v = std::stol(p, &used);
    if (used != p.size()) throw std::invalid_argument("not an integer: " + p);
    return v;
  };
  const long a = num(parts[0]), b = num(parts[1]), c = num(parts[2]);
  const long n = num(parts[3]), r = num(parts[4]);
  long s = 0;
  if (parts[5] == "auto") {
    const AdmissibilityReport quot = isAdmissible(SixTuple(a, b, c, 1, r, 0));
    if (!quot.pSigma)
      throw std::invalid_argument(
          "s=auto needs a genus-one quotient whose D_1 visits every label");
    s = ((-(*quot.pSigma) * (*quot.qSigma)) % n + n) % n;
  } else {
    s = num(parts[5]);
  }
  return SixTuple(a, b, c, n, r, s);
}

json sigmaJson(const SixTuple& sg) {
  return json{{"a", sg.a}, {"b", sg.b}, {"c", sg.c},
              {"n", sg.n}, {"r", sg.r}, {"s", sg.s}};
}

json reportJson(const AdmissibilityReport& rep) {
  json j;
  j["sigma"] = sigmaJson(rep.sigma);
  j["m"] = rep.mCycles;
  j["cond1"] = rep.cond1;
  j["cond2"] = rep.cond2;
  j["complement_connected"] = rep.complementConnected;
  j["cond_i_prime"] = rep.condIPrime;
  j["cond_ii_prime"] = rep.condIIPrime;
  j["admissible"] = rep.admissible;
  if (rep.pSigma) {
    j["p"] = *rep.pSigma;
    j["q"] = *rep.qSigma;
    j["p_prime"] = rep.pPrime;
    j["p_double_prime"] = rep.pDoublePrime;
    j["q_prime"] = rep.qPrime;
    j["q_double_prime"] = rep.qDoublePrime;
  } else {
    j["p"] = nullptr;
    j["q"] = nullptr;
  }
  return j;
}

// Group orders can exceed 64 bits; JSON carries them as strings.
json orderJson(const std::optional<mpz_class>& order) {
  if (!order) return "infinite";
  return order->get_str();
}

json homologyJson(const AbelianGroupDecomp& h) {
  json torsion = json::array();
  for (const mpz_class& t : h.torsion) torsion.push_back(t.get_str());
  return json{{"torsion", torsion},
              {"free_rank", h.freeRank},
              {"order", orderJson(h.order())},
              {"group", h.str()}};
}

void printReportTable(const AdmissibilityReport& rep) {
  std::cout << "sigma        " << rep.sigma.str() << "\n"
            << "d            " << rep.sigma.d << "\n"
            << "m (cycles)   " << rep.mCycles << "\n"
            << "condition 1  " << (rep.cond1 ? "yes" : "no") << " (m = n)\n"
            << "condition 2  " << (rep.cond2 ? "yes" : "no")
            << " (complement connected)\n"
            << "labels (i')  " << (rep.condIPrime ? "yes" : "no") << "\n"
            << "labels (ii') " << (rep.condIIPrime ? "yes" : "no") << "\n";
  if (rep.pSigma)
    std::cout << "p, q         " << *rep.pSigma << ", " << *rep.qSigma << "\n";
  else
    std::cout << "p, q         undefined ((i') fails)\n";
  std::cout << "admissible   " << (rep.admissible ? "yes" : "no") << "\n";
}

int cmdCheck(const std::string& sigmaText, Format fmt) {
  const SixTuple sigma = parseSigma(sigmaText);
  const AdmissibilityReport rep = isAdmissible(sigma);
  if (fmt == Format::Json) {
    std::cout << reportJson(rep).dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "a,b,c,n,r,s,m,cond1,cond2,i_prime,ii_prime,p,q,admissible\n"
              << rep.sigma.a << "," << rep.sigma.b << "," << rep.sigma.c << ","
              << rep.sigma.n << "," << rep.sigma.r << "," << rep.sigma.s << ","
              << rep.mCycles << "," << rep.cond1 << "," << rep.cond2 << ","
              << rep.condIPrime << "," << rep.condIIPrime << ","
              << (rep.pSigma ? std::to_string(*rep.pSigma) : "") << ","
              << (rep.qSigma ? std::to_string(*rep.qSigma) : "") << ","
              << rep.admissible << "\n";
  } else {
    printReportTable(rep);
  }
  return rep.admissible ? 0 : 1;
}

int cmdClassify(const std::string& sigmaText, Format fmt) {
  const SixTuple sigma = parseSigma(sigmaText);
  const AdmissibilityReport rep = isAdmissible(sigma);
  if (!rep.admissible) {
    std::cerr << "not admissible: " << sigma.str() << "\n";
    return 1;
  }
  const CoveringReport cr = coveringReport(sigma);
  const AbelianGroupDecomp h = firstHomology(sigma);
  if (fmt == Format::Json) {
    json j;
    j["sigma"] = sigmaJson(sigma);
    j["quotient_tuple"] = sigmaJson(cr.quotientTuple);
    j["quotient_class"] = cr.quotientClass.str();
    j["fold_count"] = cr.foldCount;
    j["branch_knot_id"] = {cr.branchKnotId[0], cr.branchKnotId[1],
                           cr.branchKnotId[2], cr.branchKnotId[3]};
    j["homology"] = homologyJson(h);
    json inter = json::array();
    for (const auto& iq : cr.intermediateQuotients)
      inter.push_back(json{{"n_prime", iq.nPrime},
                           {"sigma", sigmaJson(iq.tuple)},
                           {"admissible", iq.admissible}});
    j["intermediate_quotients"] = inter;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "sigma            " << sigma.str() << "\n"
              << "quotient tuple   " << cr.quotientTuple.str() << "\n"
              << "quotient class   " << cr.quotientClass.str() << "\n"
              << "covering degree  " << cr.foldCount << "\n"
              << "branch knot id   (" << cr.branchKnotId[0] << ","
              << cr.branchKnotId[1] << "," << cr.branchKnotId[2] << ","
              << cr.branchKnotId[3] << ")\n"
              << "H_1              " << h.str() << "\n";
    for (const auto& iq : cr.intermediateQuotients)
      std::cout << "intermediate n'=" << iq.nPrime << "  " << iq.tuple.str()
                << "  admissible=" << (iq.admissible ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmdWord(const std::string& sigmaText, Format fmt) {
  const SixTuple sigma = parseSigma(sigmaText);
  const AdmissibilityReport rep = isAdmissible(sigma);
  if (!rep.admissible) {
    std::cerr << "not admissible: " << sigma.str() << "\n";
    return 1;
  }
  const CyclicPresentation pres = buildPresentation(sigma);
  if (fmt == Format::Json) {
    json letters = json::array();
    for (const Letter& l : pres.baseWord.letters)
      letters.push_back(json{{"generator", l.generator},
                             {"exponent", l.exponent}});
    json rels = json::array();
    for (const CyclicWord& rel : pres.relators) rels.push_back(rel.str());
    std::cout << json{{"sigma", sigmaJson(sigma)},
                      {"generators", pres.n},
                      {"word", pres.baseWord.str()},
                      {"letters", letters},
                      {"exponent_sum", exponentSum(pres.baseWord)},
                      {"relators", rels}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "sigma        " << sigma.str() << "\n"
              << "generators   " << pres.n << "\n"
              << "word         " << pres.baseWord.str() << "\n"
              << "exponent sum " << exponentSum(pres.baseWord) << "\n"
              << "relators\n";
    std::cout << pres.str();
  }
  return 0;
}

int cmdHomology(const std::string& sigmaText, Format fmt) {
  const SixTuple sigma = parseSigma(sigmaText);
  const AdmissibilityReport rep = isAdmissible(sigma);
  if (!rep.admissible) {
    std::cerr << "not admissible: " << sigma.str() << "\n";
    return 1;
  }
  const AbelianGroupDecomp h = firstHomology(sigma);
  if (fmt == Format::Json) {
    std::cout << json{{"sigma", sigmaJson(sigma)}, {"homology", homologyJson(h)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "sigma  " << sigma.str() << "\n"
              << "H_1    " << h.str() << "\n"
              << "order  "
              << (h.order() ? h.order()->get_str() : std::string("infinite"))
              << "\n";
  }
  return 0;
}

// ---------------- sweep ----------------

struct Range {
  long lo = 0, hi = -1;  // inclusive; hi = -1 means "derived default"
  bool given = false;
};

struct SweepConfig {
  Range a, b, c, n, r, s;
  std::string filter;  // "", "admissible", "p1", "dodd"
  Format format = Format::Table;
  int jobs = defaultJobs();
};

Range parseRange(const std::string& text) {
  Range rg;
  rg.given = true;
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    rg.lo = rg.hi = std::stol(text);
  } else {
    rg.lo = std::stol(text.substr(0, pos));
    rg.hi = std::stol(text.substr(pos + 2));
  }
  if (rg.lo > rg.hi) throw std::invalid_argument("empty range: " + text);
  return rg;
}

void loadConfigFile(SweepConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    size_t start = 0;
    while (start < line.size() &&
           std::isspace(static_cast<unsigned char>(line[start])))
      ++start;
    line = line.substr(start);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line is not key=value: " + line);
    const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "a") cfg.a = parseRange(val);
    else if (key == "b") cfg.b = parseRange(val);
    else if (key == "c") cfg.c = parseRange(val);
    else if (key == "n") cfg.n = parseRange(val);
    else if (key == "r") cfg.r = parseRange(val);
    else if (key == "s") cfg.s = parseRange(val);
    else if (key == "filter") cfg.filter = val;
    else if (key == "format") cfg.format = parseFormat(val);
    else if (key == "jobs") cfg.jobs = static_cast<int>(std::stol(val));
    else throw std::invalid_argument("unknown config key: " + key);
  }
}

struct SweepRecord {
  SixTuple sigma;
  AdmissibilityReport rep;
  std::optional<long> eps;
  std::optional<ManifoldClass> quotient;
  std::optional<AbelianGroupDecomp> h1;
  bool emitted = true;
};

SweepRecord sweepOne(const SixTuple& sigma, const std::string& filter) {
  SweepRecord rec;
  rec.sigma = sigma;
  rec.rep = isAdmissible(sigma);
  if (filter == "admissible" && !rec.rep.admissible) {
    rec.emitted = false;
    return rec;
  }
  if (filter == "dodd" && sigma.d % 2 == 0) {
    rec.emitted = false;
    return rec;
  }
  if (filter == "p1" &&
      !(rec.rep.pSigma && (*rec.rep.pSigma == 1 || *rec.rep.pSigma == -1))) {
    rec.emitted = false;
    return rec;
  }
  if (rec.rep.admissible) {
    const CyclicPresentation pres = buildPresentation(sigma);
    rec.eps = exponentSum(pres.baseWord);
    rec.h1 = smithNormalForm(relationMatrix(pres));
    const SixTuple quot(sigma.a, sigma.b, sigma.c, 1, sigma.r, 0);
    if (isAdmissible(quot).admissible) rec.quotient = classifyGenusOne(quot);
  }
  return rec;
}

int cmdSweep(const SweepConfig& cfgIn) {
  SweepConfig cfg = cfgIn;
  if (!cfg.a.given) cfg.a = {0, 2, true};
  if (!cfg.b.given) cfg.b = {0, 2, true};
  if (!cfg.c.given) cfg.c = {0, 2, true};
  if (!cfg.n.given) cfg.n = {1, 2, true};
  if (cfg.n.lo < 1) throw std::invalid_argument("sweep: n must be >= 1");
  if (cfg.a.lo < 0 || cfg.b.lo < 0 || cfg.c.lo < 0)
    throw std::invalid_argument("sweep: a, b, c must be >= 0");
  // Enumerate the box in lexicographic order.  Unless given, r runs over
  // [0, d) and s over [0, n).
  std::vector<SixTuple> box;
  for (long a = cfg.a.lo; a <= cfg.a.hi; ++a)
    for (long b = cfg.b.lo; b <= cfg.b.hi; ++b)
      for (long c = cfg.c.lo; c <= cfg.c.hi; ++c) {
        if (a + b + c == 0) continue;
        const long d = 2 * a + b + c;
        for (long n = cfg.n.lo; n <= cfg.n.hi; ++n) {
          const long rLo = cfg.r.given ? cfg.r.lo : 0;
          const long rHi = cfg.r.given ? cfg.r.hi : d - 1;
          const long sLo = cfg.s.given ? cfg.s.lo : 0;
          for (long r = rLo; r <= rHi; ++r) {
            const long sHi = cfg.s.given ? cfg.s.hi : n - 1;
            for (long s = sLo; s <= sHi; ++s)
              box.emplace_back(a, b, c, n, r, s);
          }
        }
      }
  std::vector<SweepRecord> records(box.size());
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1 || box.size() < 2) {
    for (size_t i = 0; i < box.size(); ++i)
      records[i] = sweepOne(box[i], cfg.filter);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (size_t i = next++; i < box.size(); i = next++)
          records[i] = sweepOne(box[i], cfg.filter);
      });
    for (auto& th : pool) th.join();
  }
  // Serialize in input order regardless of parallelism.
  auto field = [](const auto& opt) {
    return opt ? std::to_string(*opt) : std::string("");
  };
  if (cfg.format == Format::Csv || cfg.format == Format::Table) {
    const char sep = cfg.format == Format::Csv ? ',' : '\t';
    std::cout << "a" << sep << "b" << sep << "c" << sep << "n" << sep << "r"
              << sep << "s" << sep << "admissible" << sep << "m" << sep << "p"
              << sep << "q" << sep << "eps" << sep << "quotient" << sep
              << "h1_order\n";
    for (const SweepRecord& rec : records) {
      if (!rec.emitted) continue;
      const SixTuple& sg = rec.sigma;
      std::cout << sg.a << sep << sg.b << sep << sg.c << sep << sg.n << sep
                << sg.r << sep << sg.s << sep << rec.rep.admissible << sep
                << rec.rep.mCycles << sep << field(rec.rep.pSigma) << sep
                << field(rec.rep.qSigma) << sep << field(rec.eps) << sep
                << (rec.quotient ? rec.quotient->str() : "") << sep
                << (rec.h1 ? (rec.h1->order() ? rec.h1->order()->get_str()
                                              : std::string("infinite"))
                           : "")
                << "\n";
    }
  } else {
    json out = json::array();
    for (const SweepRecord& rec : records) {
      if (!rec.emitted) continue;
      json j;
      j["sigma"] = sigmaJson(rec.sigma);
      j["admissible"] = rec.rep.admissible;
      j["m"] = rec.rep.mCycles;
      j["p"] = rec.rep.pSigma ? json(*rec.rep.pSigma) : json(nullptr);
      j["q"] = rec.rep.qSigma ? json(*rec.rep.qSigma) : json(nullptr);
      j["eps"] = rec.eps ? json(*rec.eps) : json(nullptr);
      j["quotient"] = rec.quotient ? json(rec.quotient->str()) : json(nullptr);
      j["h1"] = rec.h1 ? homologyJson(*rec.h1) : json(nullptr);
      out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmdTwoBridge(long alpha, long beta, long nMax, Format fmt) {
  const TwoBridgeKnot knot(alpha, beta);
  const IntegerLaurentPoly delta = alexanderTwoBridge(knot);
  // Dunwoody side: (a, 0, 1, n, r, -q mod n) with a = (alpha-1)/2, r = beta/2.
  const long a = (knot.alpha - 1) / 2, r = knot.beta / 2;
  const SixTuple quot(a, 0, 1, 1, r, 0);
  const AdmissibilityReport qrep = isAdmissible(quot);
  if (!qrep.admissible || !qrep.qSigma)
    throw std::invalid_argument("two-bridge: genus-one quotient not admissible");
  const long q = *qrep.qSigma;
  bool allMatch = true;
  json rows = json::array();
  if (fmt != Format::Json) {
    const char sep = fmt == Format::Csv ? ',' : '\t';
    std::cout << "n" << sep << "sigma" << sep << "h1_order" << sep
              << "oracle_order" << sep << "match\n";
  }
  for (long n = 2; n <= nMax; ++n) {
    const long s = ((-q) % n + n) % n;
    const SixTuple sigma(a, 0, 1, n, r, s);
    const auto h1 = firstHomology(sigma).order();
    const auto oracle = branchedCoverOrder(delta, n);
    const bool match = (h1 && oracle && *h1 == *oracle) || (!h1 && !oracle);
    allMatch = allMatch && match;
    if (fmt == Format::Json) {
      rows.push_back(json{{"n", n},
                          {"sigma", sigmaJson(sigma)},
                          {"h1_order", orderJson(h1)},
                          {"oracle_order", orderJson(oracle)},
                          {"match", match}});
    } else {
      const char sep = fmt == Format::Csv ? ',' : '\t';
      std::cout << n << sep << sigma.str() << sep
                << (h1 ? h1->get_str() : std::string("infinite")) << sep
                << (oracle ? oracle->get_str() : std::string("infinite")) << sep
                << match << "\n";
    }
  }
  if (fmt == Format::Json)
    std::cout << json{{"alpha", knot.alpha},
                      {"beta", knot.beta},
                      {"alexander", delta.str()},
                      {"rows", rows},
                      {"all_match", allMatch}}
                     .dump(2)
              << "\n";
  return allMatch ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dunwoody Heegaard diagrams: admissibility, presentations, "
               "homology, classification"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "Output format: table, json, csv")
      ->capture_default_str();

  std::string sigmaText;
  auto* check = app.add_subcommand("check", "Admissibility report");
  check->add_option("sigma", sigmaText, "6-tuple a,b,c,n,r,s (s may be 'auto')")
      ->required();
  auto* classify = app.add_subcommand("classify", "Covering report");
  classify->add_option("sigma", sigmaText)->required();
  auto* word = app.add_subcommand("word", "Base word and presentation");
  word->add_option("sigma", sigmaText)->required();
  auto* homology = app.add_subcommand("homology", "First homology");
  homology->add_option("sigma", sigmaText)->required();

  auto* sweep = app.add_subcommand("sweep", "Enumerate a box of 6-tuples");
  std::string aRange, bRange, cRange, nRange, rRange, sRange, filter, cfgPath;
  int jobs = defaultJobs();
  sweep->add_option("--config", cfgPath, "Config file (key=value lines)");
  sweep->add_option("--a", aRange, "Range lo..hi or single value");
  sweep->add_option("--b", bRange, "Range lo..hi or single value");
  sweep->add_option("--c", cRange, "Range lo..hi or single value");
  sweep->add_option("--n", nRange, "Range lo..hi or single value");
  sweep->add_option("--r", rRange, "Range (default: all r in [0,d))");
  sweep->add_option("--s", sRange, "Range (default: all s in [0,n))");
  sweep->add_option("--filter", filter,
                    "Filter: admissible, p1 (p = +-1), dodd (d odd)");
  sweep->add_option("--jobs", jobs, "Worker threads (env DUNWOODY_JOBS)");

  auto* twoBridge = app.add_subcommand(
      "two-bridge", "Verify branched covers of a 2-bridge knot");
  long tbAlpha = 0, tbBeta = 0, nMax = 6;
  twoBridge->add_option("alpha", tbAlpha, "Odd determinant")->required();
  twoBridge->add_option("beta", tbBeta, "Slope, coprime to alpha")->required();
  twoBridge->add_option("--n-max", nMax, "Largest covering degree")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    const Format fmt = parseFormat(format);
    if (check->parsed()) return cmdCheck(sigmaText, fmt);
    if (classify->parsed()) return cmdClassify(sigmaText, fmt);
    if (word->parsed()) return cmdWord(sigmaText, fmt);
    if (homology->parsed()) return cmdHomology(sigmaText, fmt);
    if (sweep->parsed()) {
      SweepConfig cfg;
      cfg.format = fmt;
      if (!cfgPath.empty()) loadConfigFile(cfg, cfgPath);
      if (!aRange.empty()) cfg.a = parseRange(aRange);
      if (!bRange.empty()) cfg.b = parseRange(bRange);
      if (!cRange.empty()) cfg.c = parseRange(cRange);
      if (!nRange.empty()) cfg.n = parseRange(nRange);
      if (!rRange.empty()) cfg.r = parseRange(rRange);
      if (!sRange.empty()) cfg.s = parseRange(sRange);
      if (!filter.empty()) cfg.filter = filter;
      if (sweep->count("--jobs")) cfg.jobs = jobs;
      if (app.count("--format")) cfg.format = fmt;
      if (!cfg.filter.empty() && cfg.filter != "admissible" &&
          cfg.filter != "p1" && cfg.filter != "dodd")
        throw std::invalid_argument("unknown filter: " + cfg.filter);
      return cmdSweep(cfg);
    }
    if (twoBridge->parsed()) return cmdTwoBridge(tbAlpha, tbBeta, nMax, fmt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
