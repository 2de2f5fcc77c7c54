#include "bcp/cnf.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bcp {

std::string to_string(const VarKey& key) {
    std::ostringstream out;
    if (const auto* x = std::get_if<XVar>(&key))
        out << "X(" << x->u << "," << x->j << ")";
    else if (const auto* y = std::get_if<YVar>(&key))
        out << "Y(" << y->u << "," << y->j << ")";
    else if (const auto* r = std::get_if<RVar>(&key))
        out << "R(" << r->u << "," << r->a << "," << r->b << ")";
    else if (const auto* s = std::get_if<SVar>(&key))
        out << "S(" << s->u << "," << s->a << "," << s->b << "," << s->a2 << "," << s->b2 << ")";
    else
        out << "Aux(" << std::get<AuxVar>(key).label << ")";
    return out.str();
}

int VarRegistry::fresh(const VarKey& key) {
    auto [it, inserted] = by_key_.emplace(key, static_cast<int>(by_id_.size()) + 1);
    if (!inserted) throw std::runtime_error("variable key already registered: " + to_string(key));
    by_id_.push_back(key);
    return it->second;
}

std::optional<int> VarRegistry::lookup(const VarKey& key) const {
    auto it = by_key_.find(key);
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
}

const VarKey& VarRegistry::reverse(int id) const {
    if (id < 1 || id > static_cast<int>(by_id_.size()))
        throw std::runtime_error("variable id " + std::to_string(id) + " not allocated");
    return by_id_[id - 1];
}

void CnfFormula::ensure_vars(int n) {
    if (n > var_count_) var_count_ = n;
}

void CnfFormula::add_clause(std::vector<int> lits) {
    for (int lit : lits) {
        if (lit == 0) throw std::runtime_error("zero literal in clause");
        int v = std::abs(lit);
        if (v > var_count_)
            throw std::runtime_error("literal " + std::to_string(lit) + " references unallocated variable");
    }
    if (lits.empty()) has_empty_ = true;
    clauses_.push_back(std::move(lits));
}

void CnfFormula::add_pinned_unit(int lit) {
    add_clause({lit});
    int v = std::abs(lit);
    if (static_cast<int>(pin_value_.size()) < var_count_) pin_value_.resize(var_count_, 0);
    std::int8_t val = lit > 0 ? 1 : -1;
    if (pin_value_[v - 1] == 0) {
        pin_value_[v - 1] = val;
        ++pinned_;
    } else if (pin_value_[v - 1] != val) {
        throw std::runtime_error("variable " + std::to_string(v) + " pinned to both polarities");
    }
}

bool CnfFormula::is_pinned(int var) const {
    return var >= 1 && var <= static_cast<int>(pin_value_.size()) && pin_value_[var - 1] != 0;
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.var_count() << " " << f.clause_count() << "\n";
    for (const auto& clause : f.clauses()) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula f;
    long declared_clauses = -1;
    std::vector<int> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, cnf;
            long vars;
            if (!(ls >> p >> cnf >> vars >> declared_clauses) || cnf != "cnf")
                throw std::runtime_error("malformed DIMACS header: " + line);
            f.ensure_vars(static_cast<int>(vars));
            continue;
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.ensure_vars([&] {
                    int mx = 0;
                    for (int l : current) mx = std::max(mx, std::abs(l));
                    return mx;
                }());
                f.add_clause(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) throw std::runtime_error("unterminated clause in DIMACS input");
    if (declared_clauses < 0) throw std::runtime_error("missing DIMACS header");
    return f;
}

} // namespace bcp
