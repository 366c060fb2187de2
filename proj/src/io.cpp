#include "qconv/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qconv::io {

namespace {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Complex parse_component(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number()) {
    throw InvalidInput(std::string(what) + ": entries must be [re, im] pairs");
  }
  const double re = v[0].get<double>();
  const double im = v[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw InvalidInput(std::string(what) + ": non-finite component");
  }
  return Complex{re, im};
}

Sequence parse_pairs(const json& arr, const char* what) {
  if (!arr.is_array() || arr.empty()) {
    throw InvalidInput(std::string(what) + ": expected a nonempty array");
  }
  Sequence out;
  out.reserve(arr.size());
  for (const json& v : arr) out.push_back(parse_component(v, what));
  return out;
}

void append_pairs(std::string& text, const Sequence& s) {
  text += "[\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    text += "  [";
    text += format_double(s[i].real());
    text += ", ";
    text += format_double(s[i].imag());
    text += i + 1 < s.size() ? "],\n" : "]\n";
  }
  text += "]";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInput("cannot write file: " + path.string());
  }
  out << text << '\n';
}

}  // namespace

Sequence parse_sequence(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("sequence file: ") + e.what());
  }
  return parse_pairs(j, "sequence file");
}

std::string format_sequence(const Sequence& s) {
  std::string text;
  append_pairs(text, s);
  return text;
}

Sequence read_sequence(const std::filesystem::path& path) {
  return parse_sequence(read_file(path));
}

void write_sequence(const std::filesystem::path& path, const Sequence& s) {
  write_file(path, format_sequence(s));
}

qsim::QuantumState parse_state(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("state file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("num_qubits") ||
      !j.contains("amplitudes")) {
    throw InvalidInput("state file: expected {num_qubits, amplitudes}");
  }
  if (!j["num_qubits"].is_number_integer()) {
    throw InvalidInput("state file: num_qubits must be an integer");
  }
  const int n = j["num_qubits"].get<int>();
  Sequence amps = parse_pairs(j["amplitudes"], "state file");
  // the QuantumState constructor re-verifies the unit norm
  return qsim::QuantumState(n, std::move(amps));
}

std::string format_state(const qsim::QuantumState& s) {
  std::string text = "{\n\"num_qubits\": ";
  text += std::to_string(s.num_qubits());
  text += ",\n\"amplitudes\": ";
  append_pairs(text, s.amplitudes());
  text += "\n}";
  return text;
}

qsim::QuantumState read_state(const std::filesystem::path& path) {
  return parse_state(read_file(path));
}

void write_state(const std::filesystem::path& path,
                 const qsim::QuantumState& s) {
  write_file(path, format_state(s));
}

}  // namespace qconv::io
