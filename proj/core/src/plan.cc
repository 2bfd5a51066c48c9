// Copyright 2026 The fqspectra Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "fqspectra/error.h"
#include "fqspectra/experiments.h"

namespace fqs {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long long to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long r = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "key '" + key + "' expects an integer, got '" + v + "'");
  }
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double r = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "key '" + key + "' expects a number, got '" + v + "'");
  }
}

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

SizeSpec SizeSpec::parse(const std::string& text) {
  const std::string t = trim(text);
  SizeSpec s;
  if (!t.empty() && (t.back() == 'x' || t.back() == 'X')) {
    s.relative = true;
    s.value = to_double("sizes", t.substr(0, t.size() - 1));
  } else {
    s.value = static_cast<double>(to_int("sizes", t));
  }
  if (s.value < 0) throw Error(ErrorCode::kParseError, "negative size '" + t + "'");
  return s;
}

std::string SizeSpec::to_string() const {
  return relative ? format_number(value) + "x"
                  : std::to_string(static_cast<std::uint64_t>(value));
}

ShiftSpec ShiftSpec::parse(const std::string& text) {
  const std::string t = trim(text);
  ShiftSpec s;
  if (t == "all") {
    s.all = true;
  } else {
    const long long v = to_int("x_sizes", t);
    if (v < 1) throw Error(ErrorCode::kParseError, "|X| must be >= 1");
    s.value = static_cast<std::uint64_t>(v);
  }
  return s;
}

std::string ShiftSpec::to_string() const {
  return all ? "all" : std::to_string(value);
}

ExperimentPlan ExperimentPlan::parse(std::istream& in) {
  ExperimentPlan plan;
  std::string line;
  std::string family = "sphere";
  Elem j = 1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "p") {
      plan.p = static_cast<int>(to_int(key, value));
    } else if (key == "n") {
      plan.n = static_cast<int>(to_int(key, value));
    } else if (key == "d") {
      plan.d = static_cast<int>(to_int(key, value));
    } else if (key == "variety") {
      family = value;
    } else if (key == "j") {
      j = static_cast<Elem>(to_int(key, value));
    } else if (key == "k") {
      plan.ks.clear();
      for (const auto& item : split_list(value)) {
        const int k = static_cast<int>(to_int(key, item));
        if (k < 1) throw Error(ErrorCode::kParseError, "k must be >= 1");
        plan.ks.push_back(k);
      }
    } else if (key == "form") {
      plan.form = value;
    } else if (key == "poly_s") {
      plan.poly_s = static_cast<int>(to_int(key, value));
    } else if (key == "poly_coeffs") {
      plan.poly_coeffs.clear();
      for (const auto& item : split_list(value)) {
        plan.poly_coeffs.push_back(static_cast<Elem>(to_int(key, item)));
      }
    } else if (key == "sizes") {
      plan.sizes.clear();
      for (const auto& item : split_list(value)) plan.sizes.push_back(SizeSpec::parse(item));
    } else if (key == "x_sizes") {
      plan.shift_sizes.clear();
      for (const auto& item : split_list(value)) {
        plan.shift_sizes.push_back(ShiftSpec::parse(item));
      }
    } else if (key == "trials") {
      plan.trials = static_cast<int>(to_int(key, value));
      if (plan.trials < 1) throw Error(ErrorCode::kParseError, "trials must be >= 1");
    } else if (key == "seed") {
      plan.seed = static_cast<std::uint64_t>(to_int(key, value));
    } else if (key == "sumset_c") {
      plan.sumset_c = to_double(key, value);
    } else if (key == "threads") {
      plan.threads = static_cast<int>(to_int(key, value));
    } else {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  plan.family = VarietyFamily::parse(family, j);
  if (plan.ks.empty()) throw Error(ErrorCode::kParseError, "k list is empty");
  if (plan.sizes.empty()) throw Error(ErrorCode::kParseError, "sizes list is empty");
  return plan;
}

ExperimentPlan ExperimentPlan::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open plan file '" + path + "'");
  return parse(in);
}

std::string ExperimentPlan::to_text() const {
  std::ostringstream os;
  auto join = [&](const auto& items, auto fmt) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out += ", ";
      out += fmt(items[i]);
    }
    return out;
  };
  os << "p = " << p << "\n"
     << "n = " << n << "\n"
     << "d = " << d << "\n"
     << "variety = " << family.name() << "\n"
     << "j = " << family.j << "\n"
     << "k = " << join(ks, [](int k) { return std::to_string(k); }) << "\n"
     << "form = " << form << "\n"
     << "poly_s = " << poly_s << "\n";
  if (!poly_coeffs.empty()) {
    os << "poly_coeffs = " << join(poly_coeffs, [](Elem a) { return std::to_string(a); }) << "\n";
  }
  os << "sizes = " << join(sizes, [](const SizeSpec& s) { return s.to_string(); }) << "\n"
     << "x_sizes = " << join(shift_sizes, [](const ShiftSpec& s) { return s.to_string(); })
     << "\n"
     << "trials = " << trials << "\n"
     << "seed = " << seed << "\n"
     << "sumset_c = " << format_number(sumset_c) << "\n";
  return os.str();
}

QuadraticForm resolve_form(const FieldContext& f, int d, const std::string& spec) {
  if (spec == "sum_squares") return QuadraticForm::sum_of_squares(f, d);
  auto entries = [&](const std::string& body) {
    std::vector<Elem> out;
    for (const auto& item : split_list(body)) {
      const long long v = to_int("form", item);
      out.push_back(f.from_int(v));
    }
    return out;
  };
  if (spec.rfind("diag:", 0) == 0) {
    auto diag = entries(spec.substr(5));
    if (static_cast<int>(diag.size()) != d) {
      throw Error(ErrorCode::kDimensionMismatch, "diag form needs d entries");
    }
    return QuadraticForm::diagonal(f, std::move(diag));
  }
  if (spec.rfind("matrix:", 0) == 0) {
    return QuadraticForm::make(f, d, entries(spec.substr(7)));
  }
  throw Error(ErrorCode::kParseError, "unknown form '" + spec + "'");
}

DiagonalPoly resolve_poly(const ExperimentPlan& plan) {
  std::vector<Elem> coeffs = plan.poly_coeffs;
  if (coeffs.empty()) coeffs.assign(plan.d, 1);
  if (static_cast<int>(coeffs.size()) != plan.d) {
    throw Error(ErrorCode::kDimensionMismatch, "poly_coeffs needs d entries");
  }
  return DiagonalPoly::make(std::move(coeffs), plan.poly_s);
}

double critical_size(Elem q, int d, int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "critical size needs k >= 2");
  return std::pow(static_cast<double>(q), (d - 1) / 2.0 + 1.0 / (k - 1));
}

}  // namespace fqs
