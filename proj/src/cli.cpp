#include "whit/cli.hpp"

#include <iomanip>
#include <iostream>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "whit/error.hpp"
#include "whit/rootdata.hpp"

namespace whit {
namespace {

using nlohmann::json;

json root_json(const RootSystem& rs, int a) {
  const Root& r = rs.pos(a);
  return json{{"index", a + 1},        {"simple_coords", r.simple},
              {"fund_coords", r.fund}, {"coroot", r.coroot},
              {"height", r.height},    {"half_norm", r.half_norm}};
}

void rootsys_json(const RootSystem& rs, const WeylGroup& W, std::ostream& out) {
  json pos = json::array();
  for (int a = 0; a < rs.npos(); ++a) pos.push_back(root_json(rs, a));
  json elems = json::array();
  for (int w = 0; w < W.size(); ++w)
    elems.push_back(json{{"word", word_str(W.elt(w).word)},
                         {"length", W.elt(w).length()}});
  json doc{{"type", rs.type()},
           {"rank", rs.rank()},
           {"cartan", rs.cartan()},
           {"num_roots", 2 * rs.npos()},
           {"positive_roots", pos},
           {"weyl_order", W.size()},
           {"longest_word", word_str(W.elt(W.longest()).word)},
           {"weyl_elements", elems}};
  out << doc.dump(2) << "\n";
}

void rootsys_table(const RootSystem& rs, const WeylGroup& W,
                   std::ostream& out) {
  out << "root system " << rs.type() << ": rank " << rs.rank() << ", "
      << 2 * rs.npos() << " roots\n";
  out << "cartan matrix:\n";
  for (int i = 0; i < rs.rank(); ++i) {
    out << " ";
    for (long v : rs.cartan()[i]) out << std::setw(4) << v;
    out << "\n";
  }
  out << "positive roots (canonical order):\n";
  out << "  idx  simple coords    height  (a,a)/2  coroot\n";
  for (int a = 0; a < rs.npos(); ++a) {
    const Root& r = rs.pos(a);
    std::string sc, cr;
    for (size_t i = 0; i < r.simple.size(); ++i)
      sc += (i ? " " : "") + std::to_string(r.simple[i]);
    for (size_t i = 0; i < r.coroot.size(); ++i)
      cr += (i ? " " : "") + std::to_string(r.coroot[i]);
    out << std::setw(5) << a + 1 << "  " << std::setw(14) << std::left << sc
        << std::right << " " << std::setw(7) << r.height << " " << std::setw(8)
        << r.half_norm << "  " << cr << "\n";
  }
  out << "Weyl group: order " << W.size() << ", longest element "
      << word_str(W.elt(W.longest()).word) << " (length "
      << W.elt(W.longest()).length() << ")\n";
  out << "elements by (length, word):";
  for (int w = 0; w < W.size(); ++w) out << " " << word_str(W.elt(w).word);
  out << "\n";
}

int run_rootsys(const std::string& type, const std::string& format) {
  RootSystem rs = RootSystem::build(type);
  WeylGroup W(rs);
  if (format == "table")
    rootsys_table(rs, W, std::cout);
  else
    rootsys_json(rs, W, std::cout);
  return 0;
}

}  // namespace

int cli_run(int argc, const char* const* argv) {
  CLI::App app{"exact computations with Whittaker modules over small-rank "
               "semisimple Lie algebras"};
  app.require_subcommand(1);

  std::string rs_type;
  std::string rs_format = "json";
  CLI::App* rootsys = app.add_subcommand(
      "rootsys", "print a root system and its Weyl group");
  rootsys->add_option("--type", rs_type, "root system: A1, A1xA1, A2, B2, A3")
      ->required();
  rootsys->add_option("--format", rs_format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
    if (rootsys->parsed()) return run_rootsys(rs_type, rs_format);
    return 0;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const SignInconsistencyError& e) {
    std::cerr << "structure constant verification failed: " << e.what()
              << "\n";
    return 4;
  } catch (const TheoremCheckError& e) {
    std::cerr << "theorem check failed: " << e.what() << "\n";
    return 4;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace whit
