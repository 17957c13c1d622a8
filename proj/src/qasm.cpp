/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "xtc/circuit.hpp"
#include "xtc/errors.hpp"

namespace xtc {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_angle(double angle) {
  if (angle == kPi) return "pi";
  if (angle == -kPi) return "-pi";
  if (angle == kPi / 2) return "pi/2";
  if (angle == -kPi / 2) return "-pi/2";
  if (angle == kPi / 4) return "pi/4";
  if (angle == -kPi / 4) return "-pi/4";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", angle);
  return buf;
}

double parse_angle(const std::string& token) {
  std::string t = token;
  double sign = 1.0;
  if (!t.empty() && t[0] == '-') {
    sign = -1.0;
    t = t.substr(1);
  }
  if (t == "pi") return sign * kPi;
  if (t.rfind("pi/", 0) == 0) {
    double denom = std::stod(t.substr(3));
    return sign * kPi / denom;
  }
  std::size_t used = 0;
  double value = std::stod(t, &used);
  if (used != t.size())
    throw_validation("SchemaError", "bad angle token: " + token);
  return sign * value;
}

}  // namespace

std::string emit_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.num_qubits() << "];\n";
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::X:
        out << "x q[" << g.q0 << "];\n";
        break;
      case GateKind::H:
        out << "h q[" << g.q0 << "];\n";
        break;
      case GateKind::RX:
        out << "rx(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::RZ:
        out << "rz(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::CNOT:
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case GateKind::SWAP:
        // standard 3-CNOT decomposition
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        out << "cx q[" << g.q1 << "],q[" << g.q0 << "];\n";
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
    }
  }
  return out.str();
}

namespace {

struct Statement {
  std::string head;            // gate name or keyword
  std::string paren;           // contents of (...) if present
  std::vector<int> qubits;     // q[i] operands
  std::string raw;
};

Statement parse_statement(const std::string& stmt) {
  Statement out;
  out.raw = stmt;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < stmt.size() && std::isspace(static_cast<unsigned char>(stmt[i]))) ++i;
  };
  skip_ws();
  while (i < stmt.size() && (std::isalnum(static_cast<unsigned char>(stmt[i])) ||
                             stmt[i] == '_' || stmt[i] == '.')) {
    out.head += stmt[i++];
  }
  skip_ws();
  if (i < stmt.size() && stmt[i] == '(') {
    std::size_t close = stmt.find(')', i);
    if (close == std::string::npos)
      throw_validation("SchemaError", "unbalanced '(' in: " + stmt);
    out.paren = stmt.substr(i + 1, close - i - 1);
    i = close + 1;
  }
  while (i < stmt.size()) {
    std::size_t open = stmt.find("q[", i);
    if (open == std::string::npos) break;
    std::size_t close = stmt.find(']', open);
    if (close == std::string::npos)
      throw_validation("SchemaError", "unbalanced '[' in: " + stmt);
    out.qubits.push_back(std::stoi(stmt.substr(open + 2, close - open - 2)));
    i = close + 1;
  }
  return out;
}

}  // namespace

Circuit parse_qasm(const std::string& text) {
  // strip // comments, then split on ';'
  std::string cleaned;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::size_t comment = line.find("//");
    if (comment != std::string::npos) line = line.substr(0, comment);
    cleaned += line;
    cleaned += '\n';
  }

  std::vector<Statement> statements;
  std::string current;
  for (char c : cleaned) {
    if (c == ';') {
      Statement s = parse_statement(current);
      if (!s.head.empty()) statements.push_back(std::move(s));
      current.clear();
    } else {
      current += c;
    }
  }

  int num_qubits = -1;
  for (const Statement& s : statements) {
    if (s.head == "qreg") {
      if (s.qubits.size() != 1)
        throw_validation("SchemaError", "bad qreg: " + s.raw);
      num_qubits = s.qubits[0];
      break;
    }
  }
  if (num_qubits <= 0)
    throw_validation("SchemaError", "no qreg declaration found");

  Circuit circuit(num_qubits);
  for (const Statement& s : statements) {
    if (s.head == "OPENQASM" || s.head == "include" || s.head == "qreg" ||
        s.head == "creg" || s.head == "barrier") {
      continue;
    }
    if (s.head == "x" && s.qubits.size() == 1) {
      circuit.append(Gate::x(s.qubits[0]));
    } else if (s.head == "h" && s.qubits.size() == 1) {
      circuit.append(Gate::h(s.qubits[0]));
    } else if (s.head == "rx" && s.qubits.size() == 1) {
      circuit.append(Gate::rx(s.qubits[0], parse_angle(s.paren)));
    } else if (s.head == "rz" && s.qubits.size() == 1) {
      circuit.append(Gate::rz(s.qubits[0], parse_angle(s.paren)));
    } else if (s.head == "cx" && s.qubits.size() == 2) {
      circuit.append(Gate::cnot(s.qubits[0], s.qubits[1]));
    } else if (s.head == "swap" && s.qubits.size() == 2) {
      circuit.append(Gate::swap(s.qubits[0], s.qubits[1]));
    } else {
      throw_validation("SchemaError", "unsupported statement: " + s.raw);
    }
  }
  return circuit;
}

}  // namespace xtc
