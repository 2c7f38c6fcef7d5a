#include "otoc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace otoc {

Gate Gate::controlled(int control, Circuit body, bool on_one) {
    for (const auto& g : body.gates())
        for (int q : g.support())
            if (q == control)
                throw std::invalid_argument("ControlledUnit body touches its control qubit");
    Gate g{GateKind::ControlledUnit, control};
    g.inner = std::make_shared<const Circuit>(std::move(body));
    g.control_on_one = on_one;
    return g;
}

Gate Gate::adjoint() const {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::CNOT:
            return *this;
        case GateKind::S: {
            Gate g = *this;
            g.kind = GateKind::Sdag;
            return g;
        }
        case GateKind::Sdag: {
            Gate g = *this;
            g.kind = GateKind::S;
            return g;
        }
        case GateKind::RX:
        case GateKind::RZ: {
            Gate g = *this;
            g.angle = -g.angle;
            return g;
        }
        case GateKind::ControlledUnit: {
            Gate g = *this;
            g.inner = std::make_shared<const Circuit>(invert(*inner));
            return g;
        }
    }
    throw std::logic_error("unreachable gate kind");
}

std::vector<int> Gate::support() const {
    switch (kind) {
        case GateKind::CNOT:
            return {q1, q2};
        case GateKind::ControlledUnit: {
            std::vector<int> qs{q1};
            for (const auto& g : inner->gates())
                for (int q : g.support())
                    if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
            return qs;
        }
        default:
            return {q1};
    }
}

bool Gate::operator==(const Gate& other) const {
    if (kind != other.kind || q1 != other.q1 || q2 != other.q2 || angle != other.angle)
        return false;
    if (kind == GateKind::ControlledUnit) {
        if (control_on_one != other.control_on_one) return false;
        return *inner == *other.inner;
    }
    return true;
}

Circuit::Circuit(int width) : width_(width) {
    if (width < 1) throw std::invalid_argument("circuit width must be >= 1");
}

Circuit::Circuit(int width, std::vector<Gate> gates) : Circuit(width) {
    for (auto& g : gates) append(std::move(g));
}

void Circuit::validate(const Gate& g) const {
    for (int q : g.support())
        if (q < 1 || q > width_)
            throw std::invalid_argument("gate qubit " + std::to_string(q) +
                                        " outside circuit width " + std::to_string(width_));
    if (g.kind == GateKind::CNOT && g.q1 == g.q2)
        throw std::invalid_argument("CNOT control equals target");
    if ((g.kind == GateKind::RX || g.kind == GateKind::RZ) && !std::isfinite(g.angle))
        throw std::invalid_argument("rotation angle must be finite");
    if (g.kind == GateKind::ControlledUnit && g.inner->width() != width_)
        throw std::invalid_argument("ControlledUnit body width differs from circuit width");
}

void Circuit::append(Gate g) {
    validate(g);
    gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
    if (other.width_ != width_)
        throw std::invalid_argument("appending circuit of different width");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

bool Circuit::operator==(const Circuit& other) const {
    return width_ == other.width_ && gates_ == other.gates_;
}

Circuit compose(const Circuit& a, const Circuit& b) {
    if (a.width() != b.width())
        throw std::invalid_argument("compose needs equal circuit widths");
    Circuit out(a.width(), a.gates());
    out.append(b);
    return out;
}

Circuit invert(const Circuit& c) {
    Circuit out(c.width());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.append(it->adjoint());
    return out;
}

DepthReport depth_report(const Circuit& c) {
    DepthReport report;
    report.gate_count = c.size();
    std::vector<std::size_t> frontier(static_cast<std::size_t>(c.width()) + 1, 0);

    struct CnotCounter {
        static std::size_t count(const Gate& g) {
            if (g.kind == GateKind::CNOT) return 1;
            if (g.kind == GateKind::ControlledUnit) {
                std::size_t total = 0;
                for (const auto& inner : g.inner->gates()) total += count(inner);
                return total;
            }
            return 0;
        }
    };

    for (const auto& g : c.gates()) {
        report.cnot_count += CnotCounter::count(g);
        const auto qs = g.support();
        std::size_t layer = 0;
        for (int q : qs) layer = std::max(layer, frontier[static_cast<std::size_t>(q)]);
        for (int q : qs) frontier[static_cast<std::size_t>(q)] = layer + 1;
        report.depth = std::max(report.depth, layer + 1);
    }
    return report;
}

Circuit widened(const Circuit& c, int width) {
    if (width < c.width())
        throw std::invalid_argument("widened target is narrower than the circuit");
    Circuit out(width);
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::ControlledUnit) {
            Gate wide = g;
            wide.inner = std::make_shared<const Circuit>(widened(*g.inner, width));
            out.append(std::move(wide));
        } else {
            out.append(g);
        }
    }
    return out;
}

namespace {

std::string format_angle(double angle) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", angle);
    return buf;
}

void format_gate(const Gate& g, std::string& out, int indent) {
    out.append(static_cast<std::size_t>(indent), ' ');
    switch (g.kind) {
        case GateKind::H: out += "H " + std::to_string(g.q1); break;
        case GateKind::S: out += "S " + std::to_string(g.q1); break;
        case GateKind::Sdag: out += "SDG " + std::to_string(g.q1); break;
        case GateKind::X: out += "X " + std::to_string(g.q1); break;
        case GateKind::RX: out += "RX " + format_angle(g.angle) + " " + std::to_string(g.q1); break;
        case GateKind::RZ: out += "RZ " + format_angle(g.angle) + " " + std::to_string(g.q1); break;
        case GateKind::CNOT:
            out += "CNOT " + std::to_string(g.q1) + " " + std::to_string(g.q2);
            break;
        case GateKind::ControlledUnit:
            out += "CTRL " + std::to_string(g.q1) + (g.control_on_one ? " on1" : " on0") + " {";
            out += '\n';
            for (const auto& inner : g.inner->gates()) format_gate(inner, out, indent + 2);
            out.append(static_cast<std::size_t>(indent), ' ');
            out += "}";
            break;
    }
    out += '\n';
}

struct LineCursor {
    std::vector<std::string> lines;
    std::size_t pos = 0;

    bool done() const { return pos >= lines.size(); }
    const std::string& next() { return lines[pos++]; }
};

Gate parse_gate(const std::string& line, LineCursor& cursor, int width);

std::vector<Gate> parse_block(LineCursor& cursor, int width) {
    std::vector<Gate> gates;
    while (!cursor.done()) {
        const std::string& line = cursor.next();
        if (line == "}") return gates;
        gates.push_back(parse_gate(line, cursor, width));
    }
    throw std::invalid_argument("unterminated CTRL block in circuit text");
}

Gate parse_gate(const std::string& line, LineCursor& cursor, int width) {
    std::istringstream in(line);
    std::string op;
    in >> op;
    auto read_int = [&] {
        int v;
        if (!(in >> v)) throw std::invalid_argument("bad qubit index in line: " + line);
        return v;
    };
    auto read_double = [&] {
        double v;
        if (!(in >> v)) throw std::invalid_argument("bad angle in line: " + line);
        return v;
    };
    if (op == "H") return Gate::h(read_int());
    if (op == "S") return Gate::s(read_int());
    if (op == "SDG") return Gate::sdag(read_int());
    if (op == "X") return Gate::x(read_int());
    if (op == "RX") {
        const double angle = read_double();
        return Gate::rx(angle, read_int());
    }
    if (op == "RZ") {
        const double angle = read_double();
        return Gate::rz(angle, read_int());
    }
    if (op == "CNOT") {
        const int control = read_int();
        return Gate::cnot(control, read_int());
    }
    if (op == "CTRL") {
        const int control = read_int();
        std::string polarity, brace;
        in >> polarity >> brace;
        if ((polarity != "on1" && polarity != "on0") || brace != "{")
            throw std::invalid_argument("bad CTRL line: " + line);
        Circuit body(width, parse_block(cursor, width));
        return Gate::controlled(control, std::move(body), polarity == "on1");
    }
    throw std::invalid_argument("unknown gate '" + op + "' in circuit text");
}

}  // namespace

std::string format_circuit(const Circuit& c) {
    std::string out;
    for (const auto& g : c.gates()) format_gate(g, out, 0);
    return out;
}

Circuit parse_circuit(const std::string& text, int width) {
    LineCursor cursor;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        cursor.lines.push_back(line.substr(begin, end - begin + 1));
    }
    Circuit out(width);
    while (!cursor.done()) {
        const std::string& l = cursor.next();
        if (l == "}") throw std::invalid_argument("unmatched '}' in circuit text");
        out.append(parse_gate(l, cursor, width));
    }
    return out;
}

}  // namespace otoc
