#include "hyper/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hyper/census.hpp"
#include "hyper/chemgen.hpp"
#include "hyper/morphisms.hpp"
#include "hyper/substructures.hpp"
#include "hyper/table_io.hpp"

namespace hyper::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// key=value in machine mode, "key: value" otherwise.
class Printer {
 public:
  Printer(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  bool machine() const noexcept { return machine_; }

  template <typename T>
  void field(const std::string& key, const T& value) {
    out_ << key << (machine_ ? "=" : ": ") << value << '\n';
  }

  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  bool machine_;
};

const char* yes_no(bool b, bool machine) {
  if (machine) {
    return b ? "true" : "false";
  }
  return b ? "yes" : "no";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("error reading '" + path + "'");
  }
  return buf.str();
}

HyperOp load_table(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_table(text);
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    throw IoError("cannot write '" + path + "'");
  }
}

std::string triple_name(const Universe& u, const TripleWitness& w) {
  return "(" + u.symbol(w.x) + ", " + u.symbol(w.y) + ", " + u.symbol(w.z) +
         ")";
}

void print_report(Printer& p, const HyperOp& op,
                  const ClassificationReport& r, bool witnesses) {
  const Universe& u = op.universe();
  const bool m = p.machine();
  p.field("class", to_string(r.class_label));
  p.field("hv_group", yes_no(is_hv_group(r.class_label), m));
  p.field("reproduction", yes_no(r.reproduction.holds, m));
  if (witnesses && r.reproduction.failing) {
    const Element x = *r.reproduction.failing;
    const SubsetMask one = SubsetMask::singleton(x);
    p.field("reproduction.witness", u.symbol(x));
    p.field("reproduction.witness.left_product",
            u.format(product_subsets(op, one, u.all())));
    p.field("reproduction.witness.right_product",
            u.format(product_subsets(op, u.all(), one)));
  }
  auto triple_field = [&](const std::string& key, const TripleResult& t) {
    p.field(key, yes_no(t.holds, m));
    if (witnesses && t.witness) {
      const TripleWitness& w = *t.witness;
      if (m) {
        p.field(key + ".witness.x", u.symbol(w.x));
        p.field(key + ".witness.y", u.symbol(w.y));
        p.field(key + ".witness.z", u.symbol(w.z));
      } else {
        p.field(key + ".witness", triple_name(u, w));
      }
      p.field(key + ".witness.left", u.format(w.left));
      p.field(key + ".witness.right", u.format(w.right));
    }
  };
  triple_field("associative", r.associative);
  triple_field("weakly_associative", r.weakly_associative);
  p.field("commutative", yes_no(r.commutative.holds, m));
  if (witnesses && r.commutative.failing) {
    const auto [x, y] = *r.commutative.failing;
    p.field("commutative.witness.x", u.symbol(x));
    p.field("commutative.witness.y", u.symbol(y));
  }
}

struct Settings {
  bool machine = false;
  unsigned workers = 1;
};

int cmd_check(const Settings& s, const std::string& path, bool witnesses,
              std::ostream& out) {
  const HyperOp op = load_table(path);
  const ClassificationReport r = classify(op, ScanOptions{s.workers});
  Printer p(out, s.machine);
  print_report(p, op, r, witnesses);
  if (witnesses) {
    return kOk;
  }
  return is_hv_group(r.class_label) ? kOk : kNotHvGroup;
}

int cmd_subs(const Settings& s, const std::string& path, std::ostream& out) {
  const HyperOp op = load_table(path);
  const auto records = enumerate_substructures(op);
  const Universe& u = op.universe();
  Printer p(out, s.machine);
  if (s.machine) {
    p.field("substructures", records.size());
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SubstructureRecord& r = records[i];
    const ClassLabel label = classify(restrict(op, r.members)).class_label;
    if (s.machine) {
      const std::string key = "substructure." + std::to_string(i);
      p.field(key, u.format(r.members));
      p.field(key + ".proper", yes_no(r.is_proper, true));
      p.field(key + ".trivial", yes_no(r.is_trivial, true));
      p.field(key + ".class", to_string(label));
    } else {
      out << u.format(r.members) << "  "
          << (r.is_trivial ? "trivial" : "proper") << "  " << to_string(label)
          << '\n';
    }
  }
  return kOk;
}

int cmd_iso(const Settings& s, const std::string& path_a,
            const std::string& path_b, std::ostream& out) {
  const HyperOp a = load_table(path_a);
  const HyperOp b = load_table(path_b);
  const auto r = find_isomorphism(a, b);
  Printer p(out, s.machine);
  if (!r) {
    if (s.machine) {
      p.field("isomorphic", "false");
    } else {
      out << "not isomorphic\n";
    }
    return kNotIsomorphic;
  }
  if (s.machine) {
    p.field("isomorphic", "true");
  }
  for (Element i = 0; i < a.order(); ++i) {
    const std::string& from = a.universe().symbol(i);
    const std::string& to = b.universe().symbol((*r)(i));
    if (s.machine) {
      p.field("map." + from, to);
    } else {
      out << from << " -> " << to << '\n';
    }
  }
  return kOk;
}

int cmd_gen(const Settings& s, const std::vector<std::string>& kinds,
            const std::string& halogen, const std::string& output,
            std::ostream& out) {
  if (kinds.empty() == halogen.empty()) {
    throw UsageError("gen needs exactly one of --kinds A B or --halogen X");
  }
  const chem::SpeciesModel model =
      halogen.empty()
          ? chem::enumerate_species(chem::AtomKind{kinds.at(0)},
                                    chem::AtomKind{kinds.at(1)})
          : chem::halogen_preset(halogen);
  const HyperOp op = chem::generate_table(model);
  if (!output.empty()) {
    write_file(output, serialize_table(op));
    if (s.machine) {
      out << "written=" << output << '\n';
    }
    return kOk;
  }
  if (!s.machine) {
    out << serialize_table(op);
    return kOk;
  }
  const Universe& u = op.universe();
  std::string elements;
  for (const auto& sym : u.symbols()) {
    elements += (elements.empty() ? "" : " ") + sym;
  }
  out << "elements=" << elements << '\n';
  for (Element x = 0; x < op.order(); ++x) {
    for (Element y = 0; y < op.order(); ++y) {
      out << "cell." << u.symbol(x) << '.' << u.symbol(y) << '=';
      bool first = true;
      for (Element e : op.cell(x, y)) {
        out << (first ? "" : " ") << u.symbol(e);
        first = false;
      }
      out << '\n';
    }
  }
  return kOk;
}

int cmd_census(const Settings& s, census::Options options, bool progress,
               std::ostream& out, std::ostream& err) {
  options.workers = s.workers;
  if (progress) {
    options.progress = [&err](std::uint64_t done, std::uint64_t planned) {
      err << "census: " << done << " / " << planned << " tables\n";
    };
  }
  const census::Report r = census::run_census(options);
  Printer p(out, s.machine);
  p.field("order", r.order);
  p.field("total_tables", r.total_tables.str());
  p.field("mode", r.sampled ? "sample" : "full");
  p.field("scanned", r.scanned);
  const std::string count_prefix = s.machine ? "count." : "";
  for (ClassLabel l : kAllLabels) {
    p.field(count_prefix + std::string(to_string(l)), r.counts[l]);
  }
  const std::string prop = s.machine ? "property." : "satisfying ";
  p.field(prop + "reproduction", r.counts.reproduction);
  p.field(prop + "associative", r.counts.associative);
  p.field(prop + "weakly_associative", r.counts.weakly_associative);
  p.field(prop + "commutative", r.counts.commutative);
  if (r.isomorphism_classes) {
    p.field("isomorphism_classes", *r.isomorphism_classes);
    for (ClassLabel l : kAllLabels) {
      p.field(std::string(s.machine ? "class_count." : "classes ") +
                  std::string(to_string(l)),
              (*r.class_counts)[l]);
    }
  }
  p.field("elapsed_ms", r.elapsed.count());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite hyperstructure toolkit", "hop"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_flag("--machine", settings.machine,
               "Line-oriented key=value output");
  app.add_option("--workers", settings.workers,
                 "Worker threads for triple scans and the census")
      ->check(CLI::Range(1U, 256U));

  std::string path_a;
  std::string path_b;

  auto* check = app.add_subcommand("check", "Classify; exit 3 unless H_v-group");
  check->add_option("file", path_a, "Table file (.hop)")->required();
  auto* classify_cmd =
      app.add_subcommand("classify", "Classification with witnesses");
  classify_cmd->add_option("file", path_a, "Table file (.hop)")->required();
  auto* subs = app.add_subcommand("subs", "List closed substructures");
  subs->add_option("file", path_a, "Table file (.hop)")->required();
  auto* iso = app.add_subcommand("iso", "Find an isomorphism; exit 4 if none");
  iso->add_option("file_a", path_a, "First table")->required();
  iso->add_option("file_b", path_b, "Second table")->required();

  std::vector<std::string> kinds;
  std::string halogen;
  std::string output;
  auto* gen = app.add_subcommand("gen", "Generate a chain-reaction table");
  auto* kinds_opt =
      gen->add_option("--kinds", kinds, "Two atom kinds, e.g. A B")
          ->expected(2);
  gen->add_option("--halogen", halogen, "Hydrogen + F, Cl, Br or I")
      ->excludes(kinds_opt);
  gen->add_option("-o,--output", output, "Write the table to a file");

  census::Options census_options;
  std::uint64_t sample = 0;
  bool progress = false;
  auto* census_cmd =
      app.add_subcommand("census", "Classify every table of a small order");
  census_cmd->add_option("--order", census_options.order, "Table order")
      ->required()
      ->check(CLI::Range(1, 64));
  census_cmd->add_flag("--dedup", census_options.dedup,
                       "Also count isomorphism classes (order <= 2)");
  auto* sample_opt = census_cmd->add_option(
      "--sample", sample, "Classify this many pseudo-random tables instead");
  census_cmd->add_option("--seed", census_options.seed, "Sampling seed");
  census_cmd->add_flag("--progress", progress, "Progress lines on stderr");

  std::vector<std::string> argv_storage{"hop"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*check) {
      return cmd_check(settings, path_a, false, out);
    }
    if (*classify_cmd) {
      return cmd_check(settings, path_a, true, out);
    }
    if (*subs) {
      return cmd_subs(settings, path_a, out);
    }
    if (*iso) {
      return cmd_iso(settings, path_a, path_b, out);
    }
    if (*gen) {
      return cmd_gen(settings, kinds, halogen, output, out);
    }
    if (*census_cmd) {
      if (*sample_opt) {
        census_options.sample = sample;
      }
      return cmd_census(settings, census_options, progress, out, err);
    }
  } catch (const IoError& e) {
    err << "hop: " << e.what() << '\n';
    return kIoError;
  } catch (const UsageError& e) {
    err << "hop: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hyper::cli
