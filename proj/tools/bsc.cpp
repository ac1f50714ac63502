// bsc: command line front end for the existence and membership checks.
//
// Exit codes: 0 pass, 1 fail, 2 undecided, 3 input error, 4 internal error.

#include "bsc/checker.hpp"
#include "bsc/instance.hpp"
#include "bsc/report.hpp"
#include "bsc/satake.hpp"
#include "bsc/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

namespace {

constexpr int kInputError = 3;
constexpr int kInternalError = 4;

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<bsc::Instance> load_all(const std::vector<std::string>& files) {
  std::vector<bsc::Instance> out;
  for (const auto& f : files) {
    auto insts = bsc::load_instances(f);
    for (auto& i : insts) out.push_back(std::move(i));
  }
  std::vector<std::string> ids;
  for (const auto& i : out) ids.push_back(i.id);
  std::sort(ids.begin(), ids.end());
  if (auto it = std::adjacent_find(ids.begin(), ids.end()); it != ids.end())
    throw std::invalid_argument("duplicate instance id '" + *it + "'");
  return out;
}

/// Checks every instance on a small worker pool; results come back in id order.
std::vector<bsc::Verdict> check_all(const std::vector<bsc::Instance>& insts) {
  std::vector<bsc::Verdict> results(insts.size());
  std::vector<std::string> errors(insts.size());
  std::vector<bool> internal(insts.size(), false);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < insts.size(); k = next++) {
      try {
        results[k] = bsc::check_instance(insts[k]);
      } catch (const bsc::UnsupportedRegime& e) {
        results[k].id = insts[k].id;
        results[k].outcome = bsc::Outcome::undecided;
        results[k].notes.push_back(e.what());
      } catch (const std::logic_error& e) {
        const bool input = dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
                           dynamic_cast<const std::out_of_range*>(&e);
        errors[k] = insts[k].id + ": " + e.what();
        internal[k] = !input;
      } catch (const std::exception& e) {
        errors[k] = insts[k].id + ": " + e.what();
      }
    }
  };
  const std::size_t nthreads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(nthreads, insts.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (std::size_t k = 0; k < insts.size(); ++k) {
    if (errors[k].empty()) continue;
    if (internal[k]) throw InternalError(errors[k]);
    throw std::invalid_argument(errors[k]);
  }
  std::sort(results.begin(), results.end(), [](const bsc::Verdict& a, const bsc::Verdict& b) { return a.id < b.id; });
  return results;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

std::vector<bsc::Instance> sorted(std::vector<bsc::Instance> insts) {
  std::sort(insts.begin(), insts.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return insts;
}

bsc::HighestWeight weights_of(const bsc::Instance& inst, const bsc::RootDatum& datum) {
  if (!inst.weights) return bsc::HighestWeight::trivial(datum, inst.field);
  std::vector<bsc::IntVec> rows;
  for (const auto& row : *inst.weights) {
    bsc::IntVec r;
    for (const auto& x : row) r.push_back(x.to_long());
    rows.push_back(std::move(r));
  }
  return bsc::HighestWeight(std::move(rows));
}

int run_check(const std::vector<std::string>& files, const std::string& out) {
  const auto verdicts = check_all(load_all(files));
  emit(bsc::render_report(verdicts), out);
  return bsc::exit_status(verdicts);
}

int run_polygon(const std::vector<std::string>& files, const std::string& plot) {
  std::vector<bsc::Instance> insts;
  for (auto& inst : sorted(load_all(files)))
    if (inst.has_galois_side()) insts.push_back(std::move(inst));
  if (insts.empty()) throw std::invalid_argument("no instance has a Galois side to draw");
  std::string text;
  for (const auto& inst : insts) {
    const auto [newton, hodge] = bsc::instance_polygons(inst);
    const std::string table = bsc::polygon_table(inst.id, newton, hodge);
    text += (text.empty() ? "" : "\n") + table;
    if (!plot.empty()) {
      const std::string stem = insts.size() == 1 ? plot : plot + "-" + inst.id;
      write_file(stem + ".svg", bsc::polygon_svg(inst.id, newton, hodge));
      write_file(stem + ".txt", table);
    }
  }
  std::cout << text;
  return 0;
}

int run_satake_norm(const std::vector<std::string>& files) {
  for (const auto& inst : sorted(load_all(files))) {
    const auto datum = bsc::RootDatum::preset(inst.group);
    bsc::GroupRingElem x;
    for (const auto& [lambda, c] : inst.terms) {
      if (lambda.size() != datum.rank()) throw std::invalid_argument(inst.id + ": cocharacter has the wrong length");
      x.add(lambda, c);
    }
    const auto v = bsc::norm_xi_val(datum, inst.field, weights_of(inst, datum), x);
    std::cout << "instance: " << inst.id << '\n'
              << "element: " << x.str() << '\n'
              << "norm-valuation: " << bsc::val_str(v) << '\n'
              << "norm: " << (v ? "q^(" + (-*v).str() + ")" : std::string("0")) << '\n'
              << "end\n";
  }
  return 0;
}

int run_affinoid(const std::vector<std::string>& files) {
  int status = 0;
  for (const auto& inst : sorted(load_all(files))) {
    if (!inst.spectral) throw std::invalid_argument(inst.id + ": affinoid needs a spectral line");
    const auto datum = bsc::RootDatum::preset(inst.group);
    const auto xi = weights_of(inst, datum);
    const bsc::WeightVec z(*inst.spectral);
    if (z.size() != datum.rank()) throw std::invalid_argument(inst.id + ": spectral point has the wrong length");
    const auto etaL = bsc::eta_L(datum, inst.field);
    const bsc::WeightVec zn = inst.normalized ? z : z + etaL;
    const bool member = bsc::in_Vxi(datum, inst.field, xi, zn, true);
    const bool hull = bsc::in_hull(datum, inst.field, xi, zn - etaL);
    if (member != hull) throw InternalError(inst.id + ": hull and dominance membership disagree");
    std::cout << "instance: " << inst.id << '\n'
              << "normalized-point: " << zn.str() << '\n'
              << "dominant: " << datum.dominant_rep(zn).str() << '\n'
              << "bound: " << (etaL + bsc::xi_L(datum, xi)).str() << '\n'
              << "eta-integral: " << (datum.eta_integral() ? "yes" : "no") << '\n'
              << "member: " << (member ? "yes" : "no") << '\n'
              << "end\n";
    if (!member) status = 1;
  }
  return status;
}

int run_convert(const std::vector<std::string>& files) {
  for (const auto& inst : sorted(load_all(files))) {
    const auto datum = bsc::RootDatum::preset(inst.group);
    if (!datum.is_general_linear()) throw std::invalid_argument(inst.id + ": weight conversion is for GL_n");
    const int d = datum.gl_degree() - 1;
    bsc::JumpTable a, i;
    if (inst.weights) {
      a = *inst.weights;
      i = bsc::jumps_from_weights(a, d);
    } else if (inst.jumps) {
      i = *inst.jumps;
      a = bsc::weights_from_jumps(i, d);
    } else {
      throw std::invalid_argument(inst.id + ": nothing to convert");
    }
    std::cout << "instance: " << inst.id << '\n';
    for (const auto& row : a) std::cout << "highest-weight: " << bsc::rat_row_str(row) << '\n';
    for (const auto& row : i) std::cout << "jumps: " << bsc::rat_row_str(row) << '\n';
    std::cout << "end\n";
  }
  return 0;
}

int run_sweep(int rank, int count, std::uint64_t seed, const std::string& out, const std::string& instances_out) {
  const auto insts = bsc::sweep_instances(rank, count, seed);
  if (!instances_out.empty()) write_file(instances_out, bsc::serialize(insts));
  const auto verdicts = check_all(insts);
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& v : verdicts) ++counts[static_cast<int>(v.outcome)];
  std::string text = bsc::render_report(verdicts);
  text += "\nsummary: rank=" + std::to_string(rank) + " count=" + std::to_string(count) + " seed=" +
          std::to_string(seed) + " pass=" + std::to_string(counts[0]) + " fail=" + std::to_string(counts[1]) +
          " undecided=" + std::to_string(counts[2]) + "\n";
  emit(text, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bsc: admissible filtrations, affinoid membership, polygons and Satake norms"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string out, plot, instances_out;
  int rank = 3, count = 100;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "decide existence of admissible filtrations and affinoid membership");
  check->add_option("files", files, "instance files")->required()->check(CLI::ExistingFile);
  check->add_option("-o,--output", out, "write the report here instead of stdout");

  auto* polygon = app.add_subcommand("polygon", "print Newton and Hodge polygon vertex tables");
  polygon->add_option("files", files, "instance files")->required()->check(CLI::ExistingFile);
  polygon->add_option("--plot", plot, "write PREFIX.svg and PREFIX.txt");

  auto* norm = app.add_subcommand("satake-norm", "valuation of the Satake norm of the listed terms");
  norm->add_option("files", files, "instance files")->required()->check(CLI::ExistingFile);

  auto* affinoid = app.add_subcommand("affinoid", "membership of a spectral point in the affinoid");
  affinoid->add_option("files", files, "instance files")->required()->check(CLI::ExistingFile);

  auto* convert = app.add_subcommand("convert-weights", "convert between highest weights and filtration jumps");
  convert->add_option("files", files, "instance files")->required()->check(CLI::ExistingFile);

  auto* sweep = app.add_subcommand("sweep", "check random GL_n instances");
  sweep->add_option("--rank", rank, "n for GL_n")->check(CLI::Range(1, 8));
  sweep->add_option("--count", count, "number of instances")->check(CLI::NonNegativeNumber);
  sweep->add_option("--seed", seed, "random seed")->envname("BSC_SEED");
  sweep->add_option("-o,--output", out, "write the report here instead of stdout");
  sweep->add_option("--instances", instances_out, "also write the generated instances here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*check) return run_check(files, out);
    if (*polygon) return run_polygon(files, plot);
    if (*norm) return run_satake_norm(files);
    if (*affinoid) return run_affinoid(files);
    if (*convert) return run_convert(files);
    if (*sweep) return run_sweep(rank, count, seed, out, instances_out);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
