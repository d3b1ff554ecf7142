// Command-line front end: subdivision, covering constructions, verification,
// the brute-force filler oracle, and figure rendering over JSON image/map
// files.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "digitop/cover1d.hpp"
#include "digitop/cover2d.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/io.hpp"
#include "digitop/oracle.hpp"
#include "digitop/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;
constexpr int kExitBudget = 4;

digitop::LatticePoint parse_point(const std::string& text) {
  digitop::LatticePoint p;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    p.push_back(std::stoi(part, &used));
    if (used != part.size())
      throw std::invalid_argument("bad coordinate \"" + part + "\"");
  }
  if (p.empty()) throw std::invalid_argument("empty point \"" + text + "\"");
  return p;
}

digitop::DigitalPath path_from_map(const digitop::DigitalMap& f) {
  if (!digitop::is_interval_image(f.domain()))
    throw std::invalid_argument(
        "path covers need a map whose domain is an interval 0..N");
  std::vector<digitop::LatticePoint> values;
  for (const auto& i : f.domain().points()) values.push_back(f(i));
  return digitop::DigitalPath(f.codomain(), values);
}

digitop::RectangleMap rectangle_from_map(const digitop::DigitalMap& f) {
  const auto& dom = f.domain();
  if (dom.dim() != 2)
    throw std::invalid_argument("rect covers need a two-dimensional domain");
  int m = 0, n = 0;
  for (const auto& p : dom.points()) {
    if (p[0] < 0 || p[1] < 0)
      throw std::invalid_argument("rectangle domain must start at (0,0)");
    m = std::max(m, p[0]);
    n = std::max(n, p[1]);
  }
  if (dom.size() != static_cast<std::size_t>((m + 1) * (n + 1)))
    throw std::invalid_argument("domain is not a full rectangle 0..M x 0..N");
  return digitop::RectangleMap::from_function(
      m, n, f.codomain(), [&f](int s, int t) { return f(digitop::pt(s, t)); });
}

int run_subdivide(const std::string& input, int k, const std::string& out) {
  const auto image = digitop::io::read_image(input);
  const auto bundle = digitop::subdivide(image, k);
  digitop::io::write_file(out + ".subdivided.json",
                          digitop::io::to_json(bundle.subdivided()));
  digitop::io::write_file(out + ".projection.json",
                          digitop::io::to_json(bundle.projection()));
  std::cout << "subdivided " << image.size() << " points into "
            << bundle.subdivided().size() << " (factor " << k << ")\n";
  return kExitOk;
}

int run_cover(const std::string& input, const std::string& mode, int k,
              const std::string& parity, const std::string& base_text,
              const std::string& out) {
  const auto f = digitop::io::read_map(input);
  digitop::DigitalMap cover = f;  // placeholder; reassigned below
  int k_dom = 1, k_cod = 1;

  if (mode == "path") {
    const auto path = path_from_map(f);
    if (parity == "odd") {
      cover = digitop::cover_path_odd(path, k).as_map();
      k_dom = k_cod = 2 * k + 1;
    } else {
      cover = digitop::cover_path_any(path, k);
      k_dom = k + 1;
      k_cod = k;
    }
  } else if (mode == "loop") {
    const auto path = path_from_map(f);
    std::optional<digitop::LatticePoint> base;
    if (!base_text.empty()) base = parse_point(base_text);
    cover = digitop::cover_loop(path, k, base).as_map();
    k_dom = (k % 2 == 1) ? k : k + 1;
    k_cod = k;
  } else if (mode == "rect") {
    if (parity != "odd")
      throw std::invalid_argument(
          "rect covers are built at odd factors; use --mode 2d for --parity any");
    cover = digitop::cover_rectangle(rectangle_from_map(f), k);
    k_dom = k_cod = 2 * k + 1;
  } else if (mode == "2d") {
    if (parity == "odd") {
      cover = digitop::cover_2d(f, k);
      k_dom = k_cod = 2 * k + 1;
    } else {
      cover = digitop::cover_2d_any(f, k);
      k_dom = k + 1;
      k_cod = k;
    }
  } else {
    throw std::invalid_argument("unknown cover mode \"" + mode + "\"");
  }

  const auto cert = digitop::verify_cover(f, cover, k_dom, k_cod);
  digitop::io::write_file(out + ".cover.json",
                          digitop::io::cover_to_json(cover, cert, k_dom, k_cod));
  if (!cert.pass()) {
    std::cerr << "error: constructed cover failed verification\n";
    return kExitInternal;
  }
  std::cout << "cover " << input << " [" << mode << ", k=" << k
            << "]: " << cover.domain().size() << " -> "
            << cover.codomain().size()
            << " points, certificate pass\n";
  return kExitOk;
}

int run_render(const std::string& input, const std::string& format,
               bool show_fibers, const std::string& out) {
  const std::string text = [&] {
    std::string result;
    try {
      auto map = digitop::io::read_map(input);
      if (show_fibers)
        return format == "svg" ? digitop::render::svg_with_fibers(map)
                               : digitop::render::ascii_with_fibers(map);
      return format == "svg" ? digitop::render::svg(map.domain())
                             : digitop::render::ascii(map.domain());
    } catch (const std::invalid_argument&) {
      // Not a map file; fall through to images.
    }
    auto image = digitop::io::read_image(input);
    if (show_fibers)
      throw std::invalid_argument(
          "--show-fibers needs a map file supplying the projection");
    return format == "svg" ? digitop::render::svg(image)
                           : digitop::render::ascii(image);
  }();
  if (out.empty())
    std::cout << text;
  else
    digitop::io::write_file(out, text);
  return kExitOk;
}

int run_oracle(const std::string& input, int k, std::size_t limit,
               std::uint64_t budget, const std::string& out) {
  const auto f = digitop::io::read_map(input);
  digitop::FillerQuery query{f, k, k, true};
  const auto result = digitop::enumerate_fillers(query, limit, budget);
  if (result.status == digitop::FillerEnumeration::Status::budget_exceeded) {
    std::cout << "BUDGET exceeded after " << result.evaluations
              << " candidate evaluations\n";
    return kExitBudget;
  }
  std::cout << "fillers: " << result.total_count
            << (result.truncated ? " (list truncated to " +
                                       std::to_string(result.fillers.size()) +
                                       ")"
                                 : "")
            << "\n";
  if (!out.empty()) {
    for (std::size_t i = 0; i < result.fillers.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), ".%03zu.json", i);
      digitop::io::write_file(out + name,
                              digitop::io::to_json(result.fillers[i]));
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digital images, subdivisions, and covers of subdivisions"};
  app.require_subcommand(1);

  std::string input, out, mode = "path", parity = "odd", base, format = "svg";
  int k = 1;
  std::size_t limit = 16;
  std::uint64_t budget = digitop::kDefaultOracleBudget;
  bool show_fibers = false;

  auto* sub = app.add_subcommand("subdivide", "subdivide an image k-fold");
  sub->add_option("input", input, "image file")->required();
  sub->add_option("--k", k, "subdivision factor (>= 1)")->required();
  sub->add_option("--out", out, "output prefix")->required();

  auto* cov = app.add_subcommand("cover", "cover a map by a map of subdivisions");
  cov->add_option("input", input, "map file (path/loop: interval domain)")
      ->required();
  cov->add_option("--mode", mode, "path | loop | rect | 2d")->required();
  cov->add_option("--k", k,
                  "parity odd: half-width, factor 2k+1; parity any and loop: "
                  "target factor k")
      ->required();
  cov->add_option("--parity", parity, "odd | any (default odd)");
  cov->add_option("--base", base, "loop base point, e.g. \"3,0\"");
  cov->add_option("--out", out, "output prefix")->required();

  auto* ren = app.add_subcommand("render", "draw an image or a projection");
  ren->add_option("input", input, "image or map file")->required();
  ren->add_option("--format", format, "svg | ascii (default svg)");
  ren->add_flag("--show-fibers", show_fibers, "tint fibers by source point");
  ren->add_option("--out", out, "output file (default stdout)");

  auto* orc = app.add_subcommand("oracle", "enumerate continuous fillers");
  orc->add_option("input", input, "map file")->required();
  orc->add_option("--k", k, "subdivision factor on both sides")->required();
  orc->add_option("--limit", limit, "max fillers kept (default 16)");
  orc->add_option("--budget", budget, "candidate-evaluation budget");
  orc->add_option("--out", out, "prefix for filler files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (sub->parsed()) return run_subdivide(input, k, out);
    if (cov->parsed()) return run_cover(input, mode, k, parity, base, out);
    if (ren->parsed()) return run_render(input, format, show_fibers, out);
    if (orc->parsed()) return run_oracle(input, k, limit, budget, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
