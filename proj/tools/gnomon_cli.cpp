#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gnomon/gnomon.hpp"

namespace {

using gnomon::i64;

// $VAR / ${VAR} expansion for output paths; unset variables expand to empty.
std::string expand_env(const std::string& path) {
  std::string out;
  std::size_t i = 0;
  while (i < path.size()) {
    if (path[i] != '$') {
      out += path[i++];
      continue;
    }
    std::size_t start = i + 1;
    std::string name;
    if (start < path.size() && path[start] == '{') {
      std::size_t end = path.find('}', start + 1);
      if (end == std::string::npos) {
        out += path.substr(i);
        break;
      }
      name = path.substr(start + 1, end - start - 1);
      i = end + 1;
    } else {
      std::size_t end = start;
      while (end < path.size() &&
             (std::isalnum(static_cast<unsigned char>(path[end])) || path[end] == '_')) {
        ++end;
      }
      if (end == start) {
        out += '$';
        i = start;
        continue;
      }
      name = path.substr(start, end - start);
      i = end;
    }
    if (const char* val = std::getenv(name.c_str())) out += val;
  }
  return out;
}

gnomon::TableRow indexed_row(const gnomon::TripleParams& p) {
  for (const auto& row : gnomon::block(p.S)) {
    if (row.params.t == p.t) return row;
  }
  throw std::domain_error("no table row with S=" + std::to_string(p.S) +
                          " t=" + std::to_string(p.t));
}

std::string row_line(const gnomon::TableRow& row) {
  return std::to_string(row.index.N) + "." + std::to_string(row.index.n) + " " +
         std::to_string(row.params.S) + " " + std::to_string(row.params.t) + " " +
         std::to_string(row.params.l) + " " + std::to_string(row.triple.x) + " " +
         std::to_string(row.triple.y) + " " + std::to_string(row.triple.a);
}

std::string descriptor_line(const char* name, const gnomon::GnomonDescriptor& g) {
  return std::string(name) + ": s1=" + std::to_string(g.s1) +
         " d=" + std::to_string(g.d) + " T=" + std::to_string(g.T) +
         " middle=" + std::to_string(gnomon::middle_term(g)) +
         " last=" + std::to_string(gnomon::last_term(g)) +
         " sum=" + std::to_string(gnomon::ap_sum(g));
}

// Resolve --s/--t into validated params, with l = S / (2t).
gnomon::TripleParams params_from_cli(i64 S, i64 t) {
  if (t < 1) {
    throw std::domain_error("t must be positive, got " + std::to_string(t));
  }
  i64 twice_t = gnomon::checked_mul(2, t);
  if (S < 2 || S % twice_t != 0) {
    throw std::domain_error("S=" + std::to_string(S) + " has no partition with t=" +
                            std::to_string(t));
  }
  return gnomon::make_params(t, S / twice_t);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"primitive Pythagorean triples from generating squares and gnomons"};
  app.require_subcommand(1);

  i64 smax = 500;
  i64 smin = 2;
  std::string format = "tsv";
  std::string out_path;
  bool dense = false;
  CLI::App* table = app.add_subcommand("table", "ordered table for even S in [smin, smax]");
  table->add_option("--smax", smax, "largest S, even")->capture_default_str();
  table->add_option("--smin", smin, "smallest S, even")->capture_default_str();
  table->add_option("--format", format, "tsv, csv or json")
      ->check(CLI::IsMember({"tsv", "csv", "json"}))
      ->capture_default_str();
  table->add_flag("--dense", dense, "print S on every row, not once per block");
  table->add_option("--out", out_path, "output path ($VAR expanded); stdout when absent");

  i64 opt_s = 0;
  i64 opt_t = 0;
  CLI::App* triple = app.add_subcommand("triple", "one table row from S and t");
  triple->add_option("--s", opt_s, "generating square side S")->required();
  triple->add_option("--t", opt_t, "partition factor t")->required();

  i64 in_x = 0;
  i64 in_y = 0;
  i64 in_a = 0;
  CLI::App* invert = app.add_subcommand("invert", "recover S, t, l and the index from a triple");
  invert->add_option("x", in_x, "odd leg")->required();
  invert->add_option("y", in_y, "even leg")->required();
  invert->add_option("a", in_a, "hypotenuse")->required();

  i64 leg_value = 0;
  std::string parity = "auto";
  CLI::App* leg = app.add_subcommand("leg", "all primitive triples containing a leg value");
  leg->add_option("value", leg_value, "leg value")->required();
  leg->add_option("--parity", parity, "auto, odd or even")
      ->check(CLI::IsMember({"auto", "odd", "even"}))
      ->capture_default_str();

  i64 g_s = 0;
  i64 g_t = 0;
  CLI::App* gn = app.add_subcommand("gnomon", "gnomon descriptors for the triple of S and t");
  gn->add_option("--s", g_s, "generating square side S")->required();
  gn->add_option("--t", g_t, "partition factor t")->required();

  i64 sc_s = 0;
  i64 sc_t = 0;
  i64 sc_k = 0;
  CLI::App* sc = app.add_subcommand("scale", "triple and descriptors scaled by k");
  sc->add_option("--s", sc_s, "generating square side S")->required();
  sc->add_option("--t", sc_t, "partition factor t")->required();
  sc->add_option("--k", sc_k, "common multiplier k")->required();

  i64 v_smax = 0;
  i64 v_legmax = 1000;
  i64 v_kmax = 10;
  CLI::App* verify = app.add_subcommand("verify", "run all verification suites");
  verify->add_option("--smax", v_smax, "largest S, even")->required();
  verify->add_option("--legmax", v_legmax, "largest leg value")->capture_default_str();
  verify->add_option("--kmax", v_kmax, "largest multiplier")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) {
      gnomon::TableFormat fmt = format == "csv"    ? gnomon::TableFormat::csv
                                : format == "json" ? gnomon::TableFormat::json
                                                   : gnomon::TableFormat::tsv;
      gnomon::RowStream rows = gnomon::enumerate(smin, smax);
      if (out_path.empty()) {
        gnomon::emit_table(rows, fmt, std::cout, dense);
      } else {
        std::string expanded = expand_env(out_path);
        std::ofstream sink(expanded, std::ios::binary);
        if (!sink) {
          throw std::domain_error("cannot open " + expanded + " for writing");
        }
        gnomon::emit_table(rows, fmt, sink, dense);
      }
      return 0;
    }

    if (triple->parsed()) {
      std::cout << row_line(indexed_row(params_from_cli(opt_s, opt_t))) << "\n";
      return 0;
    }

    if (invert->parsed()) {
      gnomon::TripleParams p = gnomon::params_from_triple({in_x, in_y, in_a});
      gnomon::TableRow row = indexed_row(p);
      std::cout << "S=" << p.S << " t=" << p.t << " l=" << p.l << " index "
                << row.index.N << "." << row.index.n << "\n";
      return 0;
    }

    if (leg->parsed()) {
      gnomon::LegParity lp;
      if (parity == "auto") {
        if (leg_value % 2 != 0) {
          lp = gnomon::LegParity::odd;
        } else if (leg_value % 4 == 0) {
          lp = gnomon::LegParity::even;
        } else {
          std::cout << "note: the even leg of a primitive triple is divisible by 4; "
                    << leg_value << " never occurs\n";
          std::cout << "count=0\n";
          return 0;
        }
      } else {
        lp = parity == "odd" ? gnomon::LegParity::odd : gnomon::LegParity::even;
      }
      i64 count = gnomon::count_leg_occurrences(leg_value, lp);
      std::vector<gnomon::TripleParams> results = lp == gnomon::LegParity::odd
                                                      ? gnomon::odd_leg_triples(leg_value)
                                                      : gnomon::even_leg_triples(leg_value);
      for (const auto& p : results) {
        std::cout << row_line(indexed_row(p)) << "\n";
      }
      std::cout << "count=" << count << "\n";
      return 0;
    }

    if (gn->parsed()) {
      gnomon::ConnectedGnomons c =
          gnomon::descriptors_from_params(params_from_cli(g_s, g_t));
      std::cout << descriptor_line("g_x", c.g_x) << "\n"
                << descriptor_line("g_y", c.g_y) << "\n";
      return 0;
    }

    if (sc->parsed()) {
      gnomon::ScaledTriple st = gnomon::scale(params_from_cli(sc_s, sc_t), sc_k);
      std::cout << "base " << st.base.x << " " << st.base.y << " " << st.base.a << "\n";
      std::cout << "k=" << st.k << " scaled " << st.kx << " " << st.ky << " " << st.ka
                << "\n";
      std::cout << descriptor_line("g_kx", st.g_kx) << "\n"
                << descriptor_line("g_ky", st.g_ky) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      if (v_smax < 2 || v_smax % 2 != 0) {
        throw std::domain_error("--smax must be even and at least 2, got " +
                                std::to_string(v_smax));
      }
      gnomon::Report report = gnomon::verify_all(v_smax, v_legmax, v_kmax);
      std::cout << gnomon::to_text(report);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return 2;
}
