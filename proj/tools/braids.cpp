#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "braids/arrangement.hpp"
#include "braids/braid_engine.hpp"
#include "braids/cover_engine.hpp"
#include "braids/errors.hpp"
#include "braids/exact_oracle.hpp"
#include "braids/fixtures.hpp"
#include "braids/json_io.hpp"

namespace {

using braids::BraidResult;
using braids::BraidWord;
using nlohmann::json;

json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw braids::ParseError("cannot open " + file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw braids::ParseError("malformed JSON in " + file + ": " + e.what());
  }
  return j;
}

json parse_inline_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw braids::ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

// A simple strand diagram: time left to right, real part top to bottom,
// one polyline per strand.
void write_svg(const braids::PLPath& path, const std::string& file) {
  const double w = 800, h = 400, margin = 20;
  double lo = 0, hi = 0;
  for (const auto& strand : path.vertices())
    for (const auto& p : strand) {
      lo = std::min(lo, p.re.convert_to<double>());
      hi = std::max(hi, p.re.convert_to<double>());
    }
  if (hi == lo) hi = lo + 1;
  std::ofstream out(file);
  if (!out) throw braids::ParseError("cannot open " + file + " for writing");
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h
      << "'>\n";
  const char* colors[] = {"#d33", "#36c", "#2a2", "#a3a", "#c82", "#088", "#666"};
  for (int i = 1; i <= path.strand_count(); ++i) {
    out << "<polyline fill='none' stroke='" << colors[(i - 1) % 7]
        << "' stroke-width='2' points='";
    for (size_t k = 0; k < path.times().size(); ++k) {
      double t = path.times()[k].convert_to<double>();
      double re = path.vertices()[i - 1][k].re.convert_to<double>();
      out << margin + t * (w - 2 * margin) << ","
          << margin + (re - lo) / (hi - lo) * (h - 2 * margin) << " ";
    }
    out << "'/>\n";
  }
  out << "</svg>\n";
}

int run(int argc, char** argv) {
  CLI::App app{"braid computation from approximate path data"};
  app.require_subcommand(1);

  std::string input, second_input, closure_text, svg_file;
  int boxes_n = 0;

  auto* compute = app.add_subcommand(
      "compute", "braid of a motion via the streaming engine");
  compute->add_option("--input", input, "path JSON file")->required();
  compute->add_option("--closure", closure_text,
                      "closure permutation as a JSON array of images");
  compute->add_option("--svg", svg_file, "write a strand diagram SVG");

  auto* oracle = app.add_subcommand(
      "oracle", "reference braid of an exact PL path");
  oracle->add_option("--input", input, "pl_path JSON file")->required();

  auto* cover_cmd = app.add_subcommand("cover", "covering arrangement sequence");
  cover_cmd->add_option("--input", input, "path JSON file")->required();

  auto* compose_cmd = app.add_subcommand(
      "compose", "braid of two motions run back to back");
  compose_cmd->add_option("first", input, "first path JSON file")->required();
  compose_cmd->add_option("second", second_input, "second path JSON file")->required();

  auto* boxes = app.add_subcommand(
      "enumerate-boxes", "count arrangements of n disjoint boxes");
  boxes->add_option("--n", boxes_n, "number of boxes")->required();

  auto* selftest = app.add_subcommand("selftest", "run the built-in fixtures");

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) {
    auto path = braids::parse_path(read_json_file(input));
    BraidResult r = braids::braid_stream(*path);
    std::optional<BraidWord> closed;
    if (!closure_text.empty()) {
      auto sigma = braids::parse_permutation(
          parse_inline_json(closure_text, "closure permutation"));
      auto z0 = path->start_configuration();
      closed = z0 ? braids::canonical_closed_word(r, sigma, *z0)
                  : braids::close_loop(r, sigma);
      closed = braids::free_reduce(*closed);
    }
    BraidResult reduced = r;
    reduced.word = braids::free_reduce(r.word);
    std::cout << braids::result_to_json(reduced, closed).dump(2) << "\n";
    if (!svg_file.empty()) {
      if (auto* pl = dynamic_cast<const braids::PLPath*>(path.get()))
        write_svg(*pl, svg_file);
      else if (auto* tube = dynamic_cast<const braids::PLTube*>(path.get()))
        write_svg(tube->center_path(), svg_file);
    }
  } else if (oracle->parsed()) {
    auto path = braids::parse_path(read_json_file(input));
    auto* pl = dynamic_cast<const braids::PLPath*>(path.get());
    if (!pl) throw braids::ParseError("the oracle needs a pl_path input");
    BraidWord w = braids::free_reduce(braids::exact_braid(*pl));
    std::cout << json{{"word", braids::word_to_json(w)}}.dump(2) << "\n";
  } else if (cover_cmd->parsed()) {
    auto path = braids::parse_path(read_json_file(input));
    braids::Cover c = braids::cover(*path);
    json arrangements = json::array(), times = json::array();
    for (const auto& g : c.arrangements)
      arrangements.push_back(braids::arrangement_to_json(g));
    for (const auto& t : c.times) times.push_back(braids::rational_to_string(t));
    std::cout << json{{"arrangements", arrangements}, {"times", times}}.dump(2)
              << "\n";
  } else if (compose_cmd->parsed()) {
    auto first = braids::parse_path(read_json_file(input));
    auto second = braids::parse_path(read_json_file(second_input));
    BraidResult r = braids::compose_results(braids::braid_stream(*first),
                                            braids::braid_stream(*second),
                                            braids::ComposeMode::bridge);
    r.word = braids::free_reduce(r.word);
    std::cout << braids::result_to_json(r, std::nullopt).dump(2) << "\n";
  } else if (boxes->parsed()) {
    std::cout << json{{"n", boxes_n},
                      {"count", braids::count_box_arrangements(boxes_n)}}
                     .dump(2)
              << "\n";
  } else if (selftest->parsed()) {
    bool ok = true;
    auto check = [&ok](const char* name, bool pass) {
      std::cout << (pass ? "pass  " : "FAIL  ") << name << "\n";
      if (!pass) ok = false;
    };
    check("box arrangement count n=2", braids::count_box_arrangements(2) == 4);
    check("box arrangement count n=3", braids::count_box_arrangements(3) == 40);
    {
      auto tube = braids::fixtures::quarter_turn_tube();
      BraidResult r = braids::braid_stream(tube);
      BraidWord closed = braids::canonical_closed_word(
          r, braids::fixtures::quarter_turn_closure(), *tube.start_configuration());
      check("quarter-turn closed word",
            braids::braids_equal(closed, braids::make_word(4, {2, 1, 3})));
    }
    {
      BraidWord w = braids::exact_braid(braids::fixtures::crossing_pair());
      check("two-strand crossing oracle", w == braids::make_word(2, {1}));
    }
    if (!ok) return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const braids::ParseError& e) {
    std::cerr << json{{"kind", "parse"}, {"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const braids::ClosureError& e) {
    std::cerr << json{{"kind", "closure"}, {"error", e.what()}}.dump() << "\n";
    return 3;
  } catch (const braids::ContractViolation& e) {
    std::cerr << json{{"kind", "contract"}, {"error", e.what()}}.dump() << "\n";
    return 2;
  }
}
