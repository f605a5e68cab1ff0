// rotaplex command line tool.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rotaplex/families.hpp"
#include "rotaplex/json_io.hpp"
#include "rotaplex/tsp_tt.hpp"
#include "rotaplex/verify.hpp"

using namespace rotaplex;

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") std::cout << text << "\n";
  else write_file(out, text + "\n");
}

RationalVector parse_vector(const std::string& s) {
  RationalVector v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  return v;
}

Polyhedron generate(const std::string& family, std::size_t n, std::size_t r, const std::string& weights) {
  if (family == "birkhoff") return birkhoff(n);
  if (family == "matching") return matching_polytope(n);
  if (family == "permutahedron") return permutahedron(n);
  if (family == "orbit") {
    if (!weights.empty()) return orbit_polytope(parse_vector(weights));
    return orbit_polytope(onion_weights(n, r == 0 ? n : r));
  }
  if (family == "stsp") {
    if (n < 5) std::cerr << "warning: stsp with n < 5 has no nonnegativity facets\n";
    return stsp(n);
  }
  if (family == "gtsp") return gtsp(n);
  throw CLI::ValidationError("family", "unknown family '" + family + "'");
}

RotationContext family_context(const std::string& family, std::size_t n) {
  if (family == "birkhoff") return birkhoff_context(n);
  if (family == "permutahedron") return permutahedron_face_context(n);
  if (family == "tsp") return tsp_context(n);
  throw CLI::ValidationError("family", "unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotaplex: exact polyhedral rotation complexes"};
  app.require_subcommand(1);
  std::string out;

  auto* gen = app.add_subcommand("gen", "generate a polyhedron of a family");
  std::string family;
  std::size_t n = 3, r = 0;
  std::string weights;
  gen->add_option("family", family, "birkhoff, matching, permutahedron, orbit, stsp or gtsp")->required();
  gen->add_option("--n", n, "size parameter");
  gen->add_option("--r", r, "onion index for orbit (default n)");
  gen->add_option("--weights", weights, "orbit weight, comma separated");
  gen->add_option("-o", out, "output file");

  auto* conv = app.add_subcommand("convert", "compute both representations");
  std::string in;
  conv->add_option("input", in, "polyhedron JSON")->required();
  conv->add_option("-o", out, "output file");

  auto* pol = app.add_subcommand("polar", "polar of a polyhedron");
  std::string convention = "STANDARD_LE", center;
  pol->add_option("input", in, "polyhedron JSON")->required();
  pol->add_option("--convention", convention, "STANDARD_LE, STANDARD_GE or BLOCKING_GE");
  pol->add_option("--center", center, "center, comma separated (default: a relative interior point)");
  pol->add_option("-o", out, "output file");

  auto* rcx = app.add_subcommand("rotation-complex", "rotation complex of a face");
  std::string restrict_to, face, z;
  bool diagram = false;
  rcx->add_option("input", in, "polyhedron JSON of P (omit with --family)");
  rcx->add_option("--family", family, "birkhoff, permutahedron or tsp");
  rcx->add_option("--n", n, "size parameter for --family");
  rcx->add_option("--face", face, "valid inequality 'a1,...,am<=b' or 'a1,...,am>=b' cutting out S");
  rcx->add_option("--convention", convention, "STANDARD_LE or BLOCKING_GE");
  rcx->add_option("--z", z, "point of relint S, comma separated");
  rcx->add_option("--restrict", restrict_to, "del-N: restrict to the TSP deletion subcomplex");
  rcx->add_flag("--diagram", diagram, "test whether the subdivision is a diagram (regular)");
  rcx->add_option("-o", out, "output file");

  auto* ver = app.add_subcommand("verify", "verify a claim and print a report");
  std::string claim;
  VerifyParams vp;
  ver->add_option("claim", claim, "claim id")->required();
  ver->add_option("--n", vp.n, "size parameter (default per claim)");
  ver->add_option("--seed", vp.seed, "random seed");
  ver->add_option("--samples", vp.samples, "number of sample pairs");
  ver->add_option("--family", vp.family, "context family for two-defs and z-independence");
  ver->add_option("-o", out, "output file");

  auto* rep = app.add_subcommand("report", "summarize report files");
  std::vector<std::string> reports;
  rep->add_option("reports", reports, "report JSON files")->required();

  auto* list = app.add_subcommand("claims", "list claim ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      emit(polyhedron_to_json(generate(family, n, r, weights)), out);
    } else if (*conv) {
      emit(polyhedron_to_json(dd_convert(polyhedron_from_json(read_file(in)))), out);
    } else if (*pol) {
      Polyhedron p = dd_convert(polyhedron_from_json(read_file(in)));
      PolarConvention c = parse_convention(convention);
      RationalVector ctr = center.empty() ? (c == PolarConvention::BlockingGe ? zero_vector(p.ambient_dim())
                                                                              : relint_point(p))
                                          : parse_vector(center);
      emit(polyhedron_to_json(polar(p, c, ctr)), out);
    } else if (*rcx) {
      RotationContext ctx = [&] {
        if (!family.empty()) return family_context(family, n);
        if (in.empty() || face.empty())
          throw CLI::ValidationError("rotation-complex", "give --family or an input file with --face");
        Polyhedron p = polyhedron_from_json(read_file(in));
        auto pos = face.find_first_of("<>");
        if (pos == std::string::npos || pos + 2 > face.size() || face[pos + 1] != '=')
          throw CLI::ValidationError("--face", "expected 'a1,...,am<=b' or '>='");
        LinearConstraint h{parse_vector(face.substr(0, pos)), parse_rational(face.substr(pos + 2)),
                           face[pos] == '<' ? Rel::LE : Rel::GE};
        std::optional<RationalVector> zz;
        if (!z.empty()) zz = parse_vector(z);
        return make_context(p, h, parse_convention(convention), zz);
      }();
      std::optional<FaceLattice> del;
      if (restrict_to == "del-N") del = del_N(ctx);
      else if (!restrict_to.empty()) throw CLI::ValidationError("--restrict", "only del-N is supported");
      PolyhedralComplex c = rotation_complex(ctx, del ? &*del : nullptr);
      nlohmann::ordered_json j = nlohmann::ordered_json::parse(complex_to_json(c));
      std::set<std::string> vs;
      for (const auto& cell : c.cells())
        for (const auto& v : cell.geometry.vertices()) vs.insert(to_string(v));
      j["summary"] = {{"maximal_cells", c.maximal_cells().size()}, {"vertices", vs.size()},
                      {"S_polar_vertices", ctx.S_polar.vertices().size()}};
      if (diagram) j["summary"]["diagram"] = convex_lifting(c).has_value();
      emit(j.dump(2), out);
    } else if (*ver) {
      VerificationReport rp = verify_claim(claim, vp);
      emit(report_to_json(rp), out);
      if (!out.empty() && out != "-")
        std::cerr << claim << ": " << to_string(rp.verdict) << "\n";
      return rp.verdict == Verdict::Verified ? 0 : rp.verdict == Verdict::Falsified ? 1 : 2;
    } else if (*rep) {
      bool all = true;
      for (const auto& f : reports) {
        auto j = nlohmann::json::parse(read_file(f));
        std::string v = j.at("verdict");
        all = all && v == "VERIFIED";
        std::cout << j.at("claim").get<std::string>() << "  n=" << j.at("params").at("n") << "  " << v << "  "
                  << j.at("timing_ms").get<double>() << " ms";
        if (!j.at("witness").get<std::string>().empty()) std::cout << "  witness: " << j.at("witness").get<std::string>();
        std::cout << "\n";
      }
      return all ? 0 : 1;
    } else if (*list) {
      for (const auto& c : known_claims()) std::cout << c << "\n";
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
