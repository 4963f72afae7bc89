#include "stammerlab/ansatz.hpp"

#include <stdexcept>
#include <vector>

namespace stammerlab {

QPoly QPoly::constant(const mpz_class& c) {
    QPoly p;
    p.add_term(0, c);
    return p;
}

QPoly QPoly::q() {
    QPoly p;
    p.add_term(1, 1);
    return p;
}

void QPoly::add_term(int exp, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

QPoly& QPoly::operator+=(const QPoly& other) {
    for (const auto& [exp, c] : other.coeffs_) add_term(exp, c);
    return *this;
}

QPoly QPoly::operator*(const QPoly& other) const {
    QPoly out;
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : other.coeffs_) out.add_term(ea + eb, ca * cb);
    return out;
}

QPoly QPoly::times_q() const {
    QPoly out;
    for (const auto& [exp, c] : coeffs_) out.add_term(exp + 1, c);
    return out;
}

bool QPoly::nonnegative() const {
    for (const auto& [exp, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

mpq_class QPoly::eval(const mpq_class& q) const {
    mpq_class out = 0;
    for (const auto& [exp, c] : coeffs_) {
        mpq_class power = 1;
        for (int i = 0; i < exp; ++i) power *= q;
        out += c * power;
    }
    return out;
}

NormalForm NormalForm::one() {
    NormalForm nf;
    nf.add_term({0, 0}, QPoly::constant(1));
    return nf;
}

void NormalForm::add_term(const EFKey& key, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool NormalForm::nonnegative() const {
    for (const auto& [key, c] : terms_)
        if (!c.nonnegative()) return false;
    return true;
}

namespace {

// Normal forms of F^j E, from F E = q E F + F + E:
//   G_0 = E,   G_j = q G_{j-1} F + F^j + G_{j-1}.
class SuffixTable {
public:
    const NormalForm& get(int j) {
        while (static_cast<int>(table_.size()) <= j) {
            int next = static_cast<int>(table_.size());
            if (next == 0) {
                NormalForm g;
                g.add_term({1, 0}, QPoly::constant(1));
                table_.push_back(std::move(g));
                continue;
            }
            const NormalForm& prev = table_[next - 1];
            NormalForm g;
            for (const auto& [key, c] : prev.terms()) {
                g.add_term({key.e, key.f + 1}, c.times_q());  // q G_{j-1} F
                g.add_term(key, c);                           // G_{j-1}
            }
            g.add_term({0, next}, QPoly::constant(1));        // F^j
            table_.push_back(std::move(g));
        }
        return table_[j];
    }

private:
    std::vector<NormalForm> table_;
};

NormalForm multiply_by_F(const NormalForm& nf) {
    NormalForm out;
    for (const auto& [key, c] : nf.terms()) out.add_term({key.e, key.f + 1}, c);
    return out;
}

NormalForm multiply_by_E(const NormalForm& nf, SuffixTable& table) {
    NormalForm out;
    for (const auto& [key, c] : nf.terms()) {
        for (const auto& [gkey, gc] : table.get(key.f).terms())
            out.add_term({key.e + gkey.e, gkey.f}, c * gc);
    }
    return out;
}

}  // namespace

NormalForm normal_order(std::string_view word) {
    SuffixTable table;
    NormalForm nf = NormalForm::one();
    for (char ch : word) {
        if (ch == 'F')
            nf = multiply_by_F(nf);
        else if (ch == 'E')
            nf = multiply_by_E(nf, table);
        else
            throw std::invalid_argument("normal_order: letters must be E or F");
    }
    return nf;
}

void TrivariatePoly::add_term(const Key& key, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool TrivariatePoly::nonnegative() const {
    for (const auto& [key, c] : terms_)
        if (c < 0) return false;
    return true;
}

TrivariatePoly to_trivariate(const NormalForm& nf) {
    TrivariatePoly out;
    for (const auto& [key, poly] : nf.terms())
        for (const auto& [exp, c] : poly.coeffs()) out.add_term({exp, key.e, key.f}, c);
    return out;
}

TrivariatePoly unnormalized_prob(std::string_view state) {
    std::string word;
    word.reserve(state.size());
    for (char ch : state) {
        if (ch == 'x')
            word += 'F';  // particle
        else if (ch == 'o')
            word += 'E';  // hole
        else
            throw std::invalid_argument("unnormalized_prob: state letters must be o or x");
    }
    return to_trivariate(normal_order(word));
}

TrivariatePoly partition_function(int n) {
    if (n < 0) throw std::invalid_argument("partition_function: length must be nonnegative");
    SuffixTable table;
    NormalForm nf = NormalForm::one();
    for (int i = 0; i < n; ++i) {
        NormalForm next = multiply_by_E(nf, table);
        NormalForm byF = multiply_by_F(nf);
        for (const auto& [key, c] : byF.terms()) next.add_term(key, c);
        nf = std::move(next);
    }
    return to_trivariate(nf);
}

mpq_class evaluate(const TrivariatePoly& p, const mpq_class& q,
                   const mpq_class& a, const mpq_class& b) {
    auto power = [](const mpq_class& base, int exp) {
        mpq_class out = 1;
        for (int i = 0; i < exp; ++i) out *= base;
        return out;
    };
    mpq_class out = 0;
    for (const auto& [key, c] : p.terms())
        out += c * power(q, key[0]) * power(a, key[1]) * power(b, key[2]);
    return out;
}

}  // namespace stammerlab
