#include "maxkcut/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "maxkcut/errors.hpp"

namespace maxkcut {

namespace {

std::string fmt(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Joins tokens into lines of bounded width; continuation lines are indented.
class LineWriter {
public:
    explicit LineWriter(std::ostringstream& out) : out_(out) {}

    void begin(const std::string& head) {
        line_ = head;
    }
    void token(const std::string& t) {
        if (line_.size() + t.size() + 1 > 220) {
            out_ << line_ << '\n';
            line_ = " ";
        }
        line_ += ' ' + t;
    }
    void end() {
        out_ << line_ << '\n';
        line_.clear();
    }

private:
    std::ostringstream& out_;
    std::string line_;
};

// Signed term "± coeff name"; the first term carries an explicit sign only
// when negative.
void push_term(LineWriter& lw, bool& first, double coeff, const std::string& body) {
    if (coeff == 0.0) return;
    const double a = std::fabs(coeff);
    std::string t;
    if (first) {
        if (coeff < 0.0) t = "- ";
    } else {
        t = coeff < 0.0 ? "- " : "+ ";
    }
    if (a != 1.0 || body.empty()) {
        t += fmt(a);
        if (!body.empty()) t += ' ';
    }
    t += body;
    lw.token(t);
    first = false;
}

const char* rel_text(Relation r) {
    switch (r) {
        case Relation::LessEq: return "<=";
        case Relation::Equal: return "=";
        case Relation::GreaterEq: return ">=";
    }
    return "?";
}

} // namespace

std::string export_lp_format(const Model& m) {
    if (!m.psd_blocks.empty())
        throw Error(ErrorKind::HasPsdBlock, "LP format cannot express PSD blocks");

    std::ostringstream out;
    out << "\\ Model: " << m.name << '\n';
    out << "Maximize\n";
    LineWriter lw(out);
    lw.begin(" obj:");
    bool first = true;
    push_term(lw, first, m.objective_constant, "");
    for (std::size_t i = 0; i < m.variables.size(); ++i)
        push_term(lw, first, m.linear_objective[i], m.variables[i].name);
    if (!m.quadratic_objective.empty()) {
        lw.token(first ? "[" : "+ [");
        bool qfirst = true;
        for (const auto& t : m.quadratic_objective) {
            const std::string body =
                t.i == t.j ? m.variables[t.i].name + " ^ 2"
                           : m.variables[t.i].name + " * " + m.variables[t.j].name;
            push_term(lw, qfirst, t.coeff, body);
        }
        lw.token("]");
        first = false;
    }
    if (first) lw.token("0");
    lw.end();

    out << "Subject To\n";
    for (const auto& c : m.constraints) {
        lw.begin(" " + c.name + ":");
        bool cfirst = true;
        for (const auto& [idx, coeff] : c.terms)
            push_term(lw, cfirst, coeff, m.variables[idx].name);
        if (cfirst) lw.token("0");
        lw.token(rel_text(c.rel));
        lw.token(fmt(c.rhs));
        lw.end();
    }

    out << "Bounds\n";
    std::vector<int> binaries, generals;
    for (std::size_t i = 0; i < m.variables.size(); ++i) {
        const auto& v = m.variables[i];
        if (v.integral && v.lb == 0.0 && v.ub == 1.0) {
            binaries.push_back(static_cast<int>(i));
            continue; // Binary implies the [0,1] box
        }
        if (v.integral) generals.push_back(static_cast<int>(i));
        if (v.lb == v.ub)
            out << ' ' << v.name << " = " << fmt(v.lb) << '\n';
        else
            out << ' ' << fmt(v.lb) << " <= " << v.name << " <= " << fmt(v.ub) << '\n';
    }
    if (!binaries.empty()) {
        out << "Binary\n";
        lw.begin("");
        for (int i : binaries) lw.token(m.variables[i].name);
        lw.end();
    }
    if (!generals.empty()) {
        out << "General\n";
        lw.begin("");
        for (int i : generals) lw.token(m.variables[i].name);
        lw.end();
    }
    out << "End\n";
    return out.str();
}

namespace {

struct SdpaEntry {
    int matno; // 0 = F0, i+1 = variable i
    int block; // 1-based
    int row;   // 1-based, row <= col
    int col;
    double value;
};

} // namespace

std::string export_sdpa_format(const Model& m) {
    if (!m.quadratic_objective.empty())
        throw Error(ErrorKind::HasQuadraticObjective,
                    "SDPA format cannot express a quadratic objective");
    if (m.psd_blocks.empty())
        throw Error(ErrorKind::NoPsdBlock, "SDPA export needs at least one PSD block");

    const int nv = m.num_variables();
    const int npsd = static_cast<int>(m.psd_blocks.size());

    std::vector<SdpaEntry> entries;
    auto push = [&entries](int matno, int block, int i, int j, double v) {
        if (v == 0.0) return;
        if (i > j) std::swap(i, j);
        entries.push_back({matno, block, i + 1, j + 1, v});
    };

    for (int b = 0; b < npsd; ++b) {
        const auto& blk = m.psd_blocks[b];
        const int order = blk.constant.order();
        for (int i = 0; i < order; ++i)
            for (int j = i; j < order; ++j)
                push(0, b + 1, i, j, -blk.constant.at(i, j)); // F0 = -constant
        for (const auto& [var, coeff] : blk.var_coeffs)
            for (int i = 0; i < order; ++i)
                for (int j = i; j < order; ++j)
                    push(var + 1, b + 1, i, j, coeff.at(i, j));
    }

    // diagonal block: lb/ub per variable, then the linear constraints
    const int diag_block = npsd + 1;
    int pos = 0;
    for (int v = 0; v < nv; ++v) {
        push(v + 1, diag_block, pos, pos, 1.0);                  // x_v - lb >= 0
        push(0, diag_block, pos, pos, m.variables[v].lb);
        ++pos;
        push(v + 1, diag_block, pos, pos, -1.0);                 // ub - x_v >= 0
        push(0, diag_block, pos, pos, -m.variables[v].ub);
        ++pos;
    }
    for (const auto& c : m.constraints) {
        const bool ge = c.rel == Relation::GreaterEq || c.rel == Relation::Equal;
        const bool le = c.rel == Relation::LessEq || c.rel == Relation::Equal;
        if (ge) {
            for (const auto& [idx, coeff] : c.terms) push(idx + 1, diag_block, pos, pos, coeff);
            push(0, diag_block, pos, pos, c.rhs);
            ++pos;
        }
        if (le) {
            for (const auto& [idx, coeff] : c.terms) push(idx + 1, diag_block, pos, pos, -coeff);
            push(0, diag_block, pos, pos, -c.rhs);
            ++pos;
        }
    }
    const int diag_size = pos;

    std::ostringstream out;
    out << "\"SDPA export: " << m.name << '\n';
    out << "\"problem: min c^T v s.t. X = sum_i v_i F_i - F0, X >= 0\n";
    out << "\"model maximum = " << fmt(m.objective_constant) << " - (minimum of this problem)\n";
    out << nv << " = mDIM\n";
    out << (npsd + 1) << " = nBLOCK\n";
    for (int b = 0; b < npsd; ++b)
        out << m.psd_blocks[b].constant.order() << (b + 1 < npsd + 1 ? " " : "");
    out << -diag_size << " = bLOCKsTRUCT\n";
    for (int v = 0; v < nv; ++v)
        out << fmt(-m.linear_objective[v]) << (v + 1 < nv ? " " : "");
    out << '\n';

    std::stable_sort(entries.begin(), entries.end(),
                     [](const SdpaEntry& a, const SdpaEntry& b) {
                         return std::tuple(a.matno, a.block, a.row, a.col) <
                                std::tuple(b.matno, b.block, b.row, b.col);
                     });
    for (const auto& e : entries)
        out << e.matno << ' ' << e.block << ' ' << e.row << ' ' << e.col << ' '
            << fmt(e.value) << '\n';
    return out.str();
}

} // namespace maxkcut
