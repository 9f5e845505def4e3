#include "otpart/graph.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace otpart {

using nlohmann::json;

AttributedGraph AttributedGraph::with_uniform_mu(std::size_t n,
                                                 std::vector<Edge> edges) {
  AttributedGraph g;
  g.n = n;
  g.edges = std::move(edges);
  g.mu.assign(n, n > 0 ? 1.0 / static_cast<double>(n) : 0.0);
  return g;
}

void AttributedGraph::validate() const {
  if (n == 0) throw EmptyGraph("graph has no nodes");
  if (mu.size() != n) throw ShapeMismatch("mu size differs from node count");
  double total = 0.0;
  for (double w : mu) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("mu entries must be finite and non-negative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidArgument("mu must sum to one");
  }
  for (const auto& e : edges) {
    if (e.i >= n || e.j >= n) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (e.i == e.j) throw InvalidArgument("self loops are not allowed");
    if (!(e.length > 0.0) || !std::isfinite(e.length)) {
      throw InvalidArgument("edge lengths must be positive and finite");
    }
  }
  if (!attributes.empty()) {
    if (attributes.size() != n) {
      throw ShapeMismatch("attribute bundle count differs from node count");
    }
    for (const auto& b : attributes) {
      if (b.empty()) {
        throw InvalidArgument("attributed graph has an empty bundle");
      }
      for (const auto& c : b.curves) {
        if (c.samples.size() < 2) {
          throw InvalidArgument("curves need at least two samples");
        }
        for (double v : c.samples) {
          if (!std::isfinite(v)) {
            throw InvalidArgument("curve samples must be finite");
          }
        }
      }
      for (const auto& h : b.histograms) {
        if (h.masses.empty()) {
          throw InvalidArgument("histograms need at least one bin");
        }
        if (!(h.bin_width > 0.0)) {
          throw InvalidArgument("histogram bin width must be positive");
        }
        double mass = 0.0;
        for (double v : h.masses) {
          if (!(v >= 0.0) || !std::isfinite(v)) {
            throw InvalidArgument("histogram masses must be non-negative");
          }
          mass += v;
        }
        if (std::abs(mass - 1.0) > 1e-9) {
          throw InvalidArgument("histogram masses must sum to one");
        }
      }
    }
  }
}

std::string graph_to_json(const AttributedGraph& g) {
  json j;
  j["nodes"] = json::array();
  for (std::size_t i = 0; i < g.n; ++i) j["nodes"].push_back(i);
  j["edges"] = json::array();
  for (const auto& e : g.edges) {
    j["edges"].push_back(json::array({e.i, e.j, e.length}));
  }
  j["mu"] = g.mu;
  if (!g.attributes.empty()) {
    json bundles = json::array();
    for (const auto& b : g.attributes) {
      json jb;
      jb["curves"] = json::array();
      for (const auto& c : b.curves) jb["curves"].push_back(c.samples);
      jb["histograms"] = json::array();
      for (const auto& h : b.histograms) {
        jb["histograms"].push_back(
            {{"bin_width", h.bin_width}, {"masses", h.masses}});
      }
      bundles.push_back(std::move(jb));
    }
    j["attributes"] = std::move(bundles);
  }
  return j.dump(2);
}

AttributedGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("graph parse failed: ") + e.what());
  }
  AttributedGraph g;
  try {
    if (!j.contains("nodes") || !j["nodes"].is_array()) {
      throw IoError("graph file lacks a nodes array");
    }
    g.n = j["nodes"].size();
    if (j.contains("edges")) {
      for (const auto& je : j["edges"]) {
        AttributedGraph::Edge e;
        e.i = je.at(0).get<std::uint32_t>();
        e.j = je.at(1).get<std::uint32_t>();
        e.length = je.size() > 2 ? je.at(2).get<double>() : 1.0;
        g.edges.push_back(e);
      }
    }
    if (j.contains("mu")) {
      g.mu = j["mu"].get<std::vector<double>>();
    } else {
      g.mu.assign(g.n, g.n > 0 ? 1.0 / static_cast<double>(g.n) : 0.0);
    }
    if (j.contains("attributes")) {
      for (const auto& jb : j["attributes"]) {
        AttributeBundle b;
        if (jb.contains("curves")) {
          for (const auto& jc : jb["curves"]) {
            b.curves.push_back({jc.get<std::vector<double>>()});
          }
        }
        if (jb.contains("histograms")) {
          for (const auto& jh : jb["histograms"]) {
            Histogram h;
            h.bin_width = jh.value("bin_width", 1.0);
            h.masses = jh.at("masses").get<std::vector<double>>();
            b.histograms.push_back(std::move(h));
          }
        }
        g.attributes.push_back(std::move(b));
      }
    }
  } catch (const json::exception& e) {
    throw IoError(std::string("graph fields malformed: ") + e.what());
  }
  g.validate();
  return g;
}

void save_graph(const AttributedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << graph_to_json(g) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

AttributedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

namespace {

void save_csv(const Partition& p, const std::string& path,
              const char* header) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << header << '\n';
  for (std::size_t i = 0; i < p.assign.size(); ++i) {
    out << i << ',' << p.assign[i] << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

void save_labels_csv(const Partition& p, const std::string& path) {
  save_csv(p, path, "node_id,group");
}

void save_partition_csv(const Partition& p, const std::string& path) {
  save_csv(p, path, "node_id,cluster");
}

Partition load_labels_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty labels file: " + path);
  Partition p;
  std::size_t expect = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw IoError("malformed labels row: " + line);
    }
    std::size_t node = 0;
    unsigned long label = 0;
    try {
      node = std::stoul(line.substr(0, comma));
      label = std::stoul(line.substr(comma + 1));
    } catch (const std::exception&) {
      throw IoError("malformed labels row: " + line);
    }
    if (node != expect) throw IoError("labels rows must be in node order");
    ++expect;
    p.assign.push_back(static_cast<std::uint32_t>(label));
    p.k = std::max(p.k, static_cast<std::uint32_t>(label) + 1);
  }
  if (p.assign.empty()) throw IoError("labels file has no rows: " + path);
  return p;
}

}  // namespace otpart
