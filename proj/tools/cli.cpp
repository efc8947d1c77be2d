#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cl3/cft.hpp"
#include "cl3/errors.hpp"
#include "cl3/field.hpp"
#include "cl3/io.hpp"
#include "cl3/uncertainty.hpp"
#include "cl3/verify.hpp"

namespace cl3::cli {
namespace {

std::vector<double> parseList(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size()) {
      throw CLI::ValidationError(what, "'" + item + "' is not a number");
    }
    values.push_back(v);
  }
  if (values.size() != expected) {
    throw CLI::ValidationError(what, "expected " + std::to_string(expected) +
                                         " comma-separated numbers, got '" + text + "'");
  }
  return values;
}

Multivector parseVector(const std::string& text, const char* what) {
  const std::vector<double> v = parseList(text, 3, what);
  return Multivector::vector(v[0], v[1], v[2]);
}

Multivector parseMultivector(const std::string& text, const char* what) {
  const std::vector<double> v = parseList(text, kBladeCount, what);
  Multivector::Coefficients c{};
  std::copy(v.begin(), v.end(), c.begin());
  return Multivector(c);
}

void writeText(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
  if (!file) throw std::runtime_error("write to " + path + " failed");
}

std::string vectorText(const Multivector& v) {
  return formatReal(v[1]) + "," + formatReal(v[2]) + "," + formatReal(v[3]);
}

std::string optionalText(const std::optional<double>& v) { return v ? formatReal(*v) : "undefined"; }

void printDirectional(std::ostream& out, const UncertaintyReport& r, const Multivector& a,
                      const Multivector& b) {
  out << "Directional uncertainty\n"
      << "  a                    " << vectorText(a) << '\n'
      << "  b                    " << vectorText(b) << '\n'
      << "  energy F             " << formatReal(r.energyF) << '\n'
      << "  spatial moment       " << formatReal(r.spatialMoment) << '\n'
      << "  spectral moment      " << formatReal(r.spectralMoment) << '\n'
      << "  product              " << formatReal(r.product) << '\n'
      << "  a.b                  " << formatReal(r.aDotB) << '\n'
      << "  bound                " << formatReal(r.bound) << '\n'
      << "  ratio                " << optionalText(r.ratio) << '\n'
      << "  orthogonal           " << (r.orthogonal ? "yes" : "no") << '\n';
}

void printTrace(std::ostream& out, const UncertaintyReport& r) {
  out << "Trace uncertainty\n"
      << "  energy F             " << formatReal(r.energyF) << '\n'
      << "  spatial trace        " << formatReal(r.traceSpatial) << '\n'
      << "  spectral trace       " << formatReal(r.traceSpectral) << '\n'
      << "  product              " << formatReal(r.traceProduct) << '\n'
      << "  bound                " << formatReal(r.traceBound) << '\n'
      << "  ratio                " << optionalText(r.traceRatio) << '\n';
}

void printKeyValues(std::ostream& out, const UncertaintyReport& r, bool directional, bool trace) {
  out << "energyF=" << formatReal(r.energyF) << '\n';
  if (directional) {
    out << "spatialMoment=" << formatReal(r.spatialMoment) << '\n'
        << "spectralMoment=" << formatReal(r.spectralMoment) << '\n'
        << "product=" << formatReal(r.product) << '\n'
        << "aDotB=" << formatReal(r.aDotB) << '\n'
        << "bound=" << formatReal(r.bound) << '\n'
        << "ratio=" << optionalText(r.ratio) << '\n'
        << "orthogonal=" << (r.orthogonal ? 1 : 0) << '\n';
  }
  if (trace) {
    out << "traceSpatial=" << formatReal(r.traceSpatial) << '\n'
        << "traceSpectral=" << formatReal(r.traceSpectral) << '\n'
        << "traceProduct=" << formatReal(r.traceProduct) << '\n'
        << "traceBound=" << formatReal(r.traceBound) << '\n'
        << "traceRatio=" << optionalText(r.traceRatio) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford Fourier transform toolkit for Cl(3,0) multivector fields", "cl3cft"};
  app.require_subcommand(1);

  const WarningSink warnings = [&err](std::string_view msg) { err << "warning: " << msg << '\n'; };
  std::function<int()> action;

  // gen-gaussian
  {
    auto* cmd = app.add_subcommand("gen-gaussian", "Write C0 exp(-k |x|^2) on a centered n^3 grid");
    auto n = std::make_shared<std::size_t>(64);
    auto dx = std::make_shared<double>(0.25);
    auto k = std::make_shared<double>(1.0);
    auto c0 = std::make_shared<std::string>("1,0,0,0,0,0,0,0");
    auto output = std::make_shared<std::string>();
    cmd->add_option("--n", *n, "Samples per axis")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 12));
    cmd->add_option("--dx", *dx, "Grid spacing")->check(CLI::PositiveNumber);
    cmd->add_option("--k", *k, "Width parameter (> 0)");
    cmd->add_option("--c0", *c0, "Amplitude coefficients 1,e1,e2,e3,e12,e31,e23,e123");
    cmd->add_option("-o,--output", *output, "Output MVF3 file")->required();
    cmd->callback([=, &action, &warnings] {
      const Multivector amplitude = parseMultivector(*c0, "--c0");
      action = [=, &warnings] {
        const Grid3 grid = Grid3::cube(*n, *dx);
        writeField(makeGaussian({amplitude, *k}, grid, warnings), *output);
        return 0;
      };
    });
  }

  // transform
  {
    auto* cmd = app.add_subcommand("transform", "Forward Clifford Fourier transform");
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto direct = std::make_shared<bool>(false);
    cmd->add_option("input", *input, "Space-domain MVF3 file")->required();
    cmd->add_option("-o,--output", *output, "Output spectrum")->required();
    cmd->add_flag("--direct", *direct, "Use the O(N^2) reference sum");
    cmd->callback([=, &action, &warnings] {
      action = [=, &warnings] {
        const MultivectorField f = readField(*input, warnings);
        writeField(*direct ? cftDirect(f) : cftFast(f), *output);
        return 0;
      };
    });
  }

  // inverse
  {
    auto* cmd = app.add_subcommand("inverse", "Inverse Clifford Fourier transform");
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    cmd->add_option("input", *input, "Frequency-domain MVF3 file")->required();
    cmd->add_option("-o,--output", *output, "Output field")->required();
    cmd->callback([=, &action, &warnings] {
      action = [=, &warnings] {
        writeField(cftInverse(readField(*input, warnings)), *output);
        return 0;
      };
    });
  }

  // convolve
  {
    auto* cmd = app.add_subcommand("convolve", "Periodic convolution (f * g)(x) = Int f(y) g(x - y) dy");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto oracle = std::make_shared<bool>(false);
    cmd->add_option("a", *a, "Left operand f")->required();
    cmd->add_option("b", *b, "Right operand g")->required();
    cmd->add_option("-o,--output", *output, "Output field")->required();
    cmd->add_flag("--oracle", *oracle, "Use the O(N^2) direct sum");
    cmd->callback([=, &action, &warnings] {
      action = [=, &warnings] {
        const MultivectorField f = readField(*a, warnings);
        const MultivectorField g = readField(*b, warnings);
        writeField(*oracle ? convolveDirect(f, g) : convolve(f, g), *output);
        return 0;
      };
    });
  }

  // derive
  {
    auto* cmd = app.add_subcommand("derive", "Finite-difference or spectral derivatives");
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto direction = std::make_shared<std::string>();
    auto grad = std::make_shared<bool>(false);
    auto lap = std::make_shared<bool>(false);
    auto order = std::make_shared<int>(1);
    cmd->add_option("input", *input, "Space-domain MVF3 file")->required();
    cmd->add_option("-o,--output", *output, "Output field")->required();
    auto* group = cmd->add_option_group("operator");
    group->add_option("--direction", *direction, "Directional difference a.grad f, a = x,y,z");
    group->add_flag("--grad", *grad, "Vector derivative grad f");
    group->add_flag("--laplacian", *lap, "7-point Laplacian");
    group->add_option("--spectral-m", *order, "Spectral (i3 w)^m multiplier, m in {1,2}");
    group->require_option(1);
    cmd->callback([=, &action, &warnings] {
      std::optional<Multivector> a;
      if (!direction->empty()) a = parseVector(*direction, "--direction");
      const bool spectral = cmd->count("--spectral-m") > 0;
      action = [=, &warnings] {
        const MultivectorField f = readField(*input, warnings);
        MultivectorField result = a         ? directionalDiff(f, *a)
                                  : *grad   ? vectorDerivative(f)
                                  : *lap    ? laplacian(f)
                                  : spectral ? spectralDerivative(f, *order)
                                             : f;
        writeField(result, *output);
        return 0;
      };
    });
  }

  // heat
  {
    auto* cmd = app.add_subcommand("heat", "Propagate d_t f = laplacian f for time t");
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto t = std::make_shared<double>(0.0);
    cmd->add_option("input", *input, "Initial field")->required();
    cmd->add_option("--t", *t, "Elapsed time (>= 0)")->required();
    cmd->add_option("-o,--output", *output, "Output field")->required();
    cmd->callback([=, &action, &warnings] {
      action = [=, &warnings] {
        writeField(heatPropagate(readField(*input, warnings), *t), *output);
        return 0;
      };
    });
  }

  // uncertainty
  {
    auto* cmd = app.add_subcommand("uncertainty", "Directional and trace uncertainty products");
    auto input = std::make_shared<std::string>();
    auto a = std::make_shared<std::string>("1,0,0");
    auto b = std::make_shared<std::string>("1,0,0");
    auto trace = std::make_shared<bool>(false);
    cmd->add_option("input", *input, "Space-domain MVF3 file")->required();
    cmd->add_option("--a", *a, "Space direction x,y,z");
    cmd->add_option("--b", *b, "Frequency direction x,y,z");
    cmd->add_flag("--trace", *trace, "Also report the trace form");
    cmd->callback([=, &action, &out, &warnings] {
      const Multivector va = parseVector(*a, "--a");
      const Multivector vb = parseVector(*b, "--b");
      action = [=, &out, &warnings] {
        const UncertaintyReport r = uncertaintyReport(readField(*input, warnings), va, vb);
        printDirectional(out, r, va, vb);
        if (*trace) printTrace(out, r);
        printKeyValues(out, r, true, *trace);
        return 0;
      };
    });
  }

  // export-slice
  {
    auto* cmd = app.add_subcommand("export-slice", "CSV of one lattice plane");
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto axis = std::make_shared<std::size_t>(2);
    auto plane = std::make_shared<std::size_t>(0);
    auto coeff = std::make_shared<std::string>("0");
    cmd->add_option("input", *input, "MVF3 file")->required();
    cmd->add_option("--axis", *axis, "Axis normal to the plane (0, 1, 2)")->required();
    cmd->add_option("--index", *plane, "Lattice index along the axis")->required();
    cmd->add_option("--coeff", *coeff, "0..7, blade name, or norm2")->required();
    cmd->add_option("-o,--output", *output, "Output CSV ('-' for stdout)")->required();
    cmd->callback([=, &action, &out, &warnings] {
      const CoefficientSelector selector = parseCoefficientSelector(*coeff);
      action = [=, &out, &warnings] {
        writeText(*output, exportSlice(readField(*input, warnings), *axis, *plane, selector), out);
        return 0;
      };
    });
  }

  // verify
  {
    auto* cmd = app.add_subcommand("verify", "Run the self-check suite");
    auto size = std::make_shared<std::size_t>(8);
    auto seed = std::make_shared<std::uint64_t>(1);
    cmd->add_option("--size", *size, "Lattice size for oracle comparisons")
        ->check(CLI::Range(std::size_t{2}, std::size_t{24}));
    cmd->add_option("--seed", *seed, "Random seed");
    cmd->callback([=, &action, &out] {
      action = [=, &out] {
        VerifyOptions options;
        options.size = *size;
        options.seed = *seed;
        std::size_t failures = 0;
        runVerification(options, [&](const CheckResult& r) {
          if (!r.passed) ++failures;
          out << (r.passed ? "PASS " : "FAIL ") << r.name << " measured=" << formatReal(r.measured)
              << " tolerance=" << formatReal(r.tolerance);
          if (!r.detail.empty()) out << " (" << r.detail << ')';
          out << '\n';
        });
        out << (failures == 0 ? "all checks passed\n"
                              : std::to_string(failures) + " check(s) failed\n");
        return failures == 0 ? 0 : 1;
      };
    });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cl3::cli
