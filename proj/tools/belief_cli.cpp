// Command line front end. Talks to the core only through the C interface
// in belief.h, same as any other embedder would.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "belief.h"

namespace {

struct DocDeleter {
  void operator()(bt_doc* d) const { bt_doc_free(d); }
};
using DocPtr = std::unique_ptr<bt_doc, DocDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  bt_string_free(s);
  return out;
}

struct Options {
  std::string thresholds;  // empty: document default
  std::string format = "json";
  std::string out_path;    // empty: stdout
  uint64_t budget = 100000;
};

const char* ths_arg(const Options& opt) {
  return opt.thresholds.empty() ? nullptr : opt.thresholds.c_str();
}

int load(const std::string& path, DocPtr& doc) {
  bt_doc* raw = nullptr;
  char* report = nullptr;
  bt_status st = bt_doc_read_file(path.c_str(), &raw, &report);
  if (st != BT_OK) {
    std::cerr << take(report) << "\n";
    return st;
  }
  doc.reset(raw);
  return BT_OK;
}

void write_doc(const Options& opt, bt_doc* doc) {
  char* text = nullptr;
  if (bt_doc_to_json(doc, &text) != BT_OK) {
    std::cerr << take(text) << "\n";
    return;
  }
  std::string body = take(text);
  if (opt.out_path.empty()) {
    std::cout << body << "\n";
  } else {
    std::ofstream f(opt.out_path);
    f << body << "\n";
  }
}

// Violations as one line each; everything else stays JSON.
void print_report(const Options& opt, const std::string& report) {
  if (report.empty()) return;
  if (opt.format == "json") {
    std::cout << report << "\n";
    return;
  }
  auto j = nlohmann::json::parse(report, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    std::cout << report << "\n";
    return;
  }
  if (j.contains("error")) {
    std::cout << j["error"]["kind"].get<std::string>() << ": "
              << j["error"]["message"].get<std::string>() << "\n";
    return;
  }
  if (j.contains("ok")) {
    if (j["ok"].get<bool>()) {
      std::cout << "ok\n";
    } else {
      for (const auto& v : j["violations"]) {
        std::cout << "violation " << v["condition"].get<std::string>();
        for (const auto& [key, val] : v["witness"].items())
          std::cout << " " << key << "=" << val.get<std::string>();
        std::cout << "\n";
      }
    }
    return;
  }
  std::cout << j.dump(2) << "\n";
}

int finish(const Options& opt, bt_status st, char* report) {
  print_report(opt, take(report));
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for graded belief models and type spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--thresholds", opt.thresholds,
                 "threshold set: dense or a comma separated list of rationals");
  app.add_option("--format", opt.format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", opt.budget, "search budget for morphism enumeration");
  app.add_option("-o,--out", opt.out_path, "write the produced document here");

  std::string file, formula, direction, src_path, dst_path, map_path;
  std::vector<std::string> files, targets;

  auto* validate = app.add_subcommand("validate", "check the defining conditions");
  validate->add_option("file", file)->required();

  auto* eval = app.add_subcommand("eval", "evaluate a formula");
  eval->add_option("file", file)->required();
  eval->add_option("formula", formula)->required();

  auto* describe = app.add_subcommand("describe", "description partitions of a model");
  describe->add_option("file", file)->required();

  auto* translate = app.add_subcommand("translate", "convert between the two structures");
  translate->add_option("file", file)->required();
  translate->add_option("--direction", direction, "t2m or m2t")->required();

  auto* merge = app.add_subcommand("witness-merge",
                                   "merge witnesses of partial descriptions");
  merge->add_option("file", file)->required();
  merge->add_option("targets", targets, "source world, then one world per agent")
      ->required();

  std::string states_path;
  auto* universal = app.add_subcommand(
      "universal", "universal model or type space of a family");
  universal->add_option("files", files)->required();
  universal->add_option("--states", states_path,
                        "space document for X (typespace families)");

  auto* morphism = app.add_subcommand("morphism-check", "verify a type morphism");
  morphism->add_option("src", src_path)->required();
  morphism->add_option("dst", dst_path)->required();
  morphism->add_option("map", map_path)->required();

  CLI11_PARSE(app, argc, argv);

  DocPtr doc;
  char* report = nullptr;

  if (validate->parsed()) {
    if (int st = load(file, doc)) return st;
    bt_status st = bt_validate(doc.get(), ths_arg(opt), &report);
    return finish(opt, st, report);
  }

  if (eval->parsed()) {
    if (int st = load(file, doc)) return st;
    bt_status st = bt_eval(doc.get(), ths_arg(opt), formula.c_str(), &report);
    return finish(opt, st, report);
  }

  if (describe->parsed()) {
    if (int st = load(file, doc)) return st;
    bt_status st = bt_describe(doc.get(), ths_arg(opt), &report);
    return finish(opt, st, report);
  }

  if (translate->parsed()) {
    if (int st = load(file, doc)) return st;
    bt_doc* out = nullptr;
    bt_status st = bt_translate(doc.get(), direction.c_str(), ths_arg(opt),
                                &out, &report);
    if (st == BT_OK) write_doc(opt, out);
    bt_doc_free(out);
    return finish(opt, st, report);
  }

  if (merge->parsed()) {
    if (int st = load(file, doc)) return st;
    std::vector<const char*> raw;
    for (const auto& t : targets) raw.push_back(t.c_str());
    bt_doc* out = nullptr;
    bt_status st =
        bt_witness_merge(doc.get(), raw.data(), raw.size(), &out, &report);
    if (st == BT_OK) write_doc(opt, out);
    bt_doc_free(out);
    return finish(opt, st, report);
  }

  if (universal->parsed()) {
    std::vector<DocPtr> docs;
    std::vector<const bt_doc*> raw;
    for (const auto& path : files) {
      DocPtr d;
      if (int st = load(path, d)) return st;
      raw.push_back(d.get());
      docs.push_back(std::move(d));
    }
    DocPtr states;
    if (!states_path.empty())
      if (int st = load(states_path, states)) return st;
    bt_doc* out = nullptr;
    bt_status st;
    if (std::string(bt_doc_kind(raw.front())) == "typespace")
      st = bt_universal_typespace(raw.data(), raw.size(), states.get(),
                                  opt.budget, &out, &report);
    else
      st = bt_universal_model(raw.data(), raw.size(), &out, &report);
    if (st == BT_OK) write_doc(opt, out);
    bt_doc_free(out);
    return finish(opt, st, report);
  }

  if (morphism->parsed()) {
    DocPtr src, dst, map;
    if (int st = load(src_path, src)) return st;
    if (int st = load(dst_path, dst)) return st;
    if (int st = load(map_path, map)) return st;
    bt_status st = bt_morphism_check(src.get(), dst.get(), map.get(), &report);
    return finish(opt, st, report);
  }

  return BT_INPUT_ERROR;
}
