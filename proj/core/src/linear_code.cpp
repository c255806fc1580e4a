#include "bsym/linear_code.hpp"

#include "bsym/error.hpp"
#include "bsym/linalg.hpp"

#include <mutex>
#include <optional>

namespace bsym {

struct LinearCode::ParityCache {
    std::once_flag once;
    std::optional<Matrix> matrix;
};

LinearCode::LinearCode(Matrix generator, std::vector<std::size_t> pivots)
    : generator_(std::move(generator)), pivots_(std::move(pivots)), parity_(std::make_shared<ParityCache>()) {}

LinearCode LinearCode::from_generator(const Matrix& generator) {
    auto [reduced, pivots] = reduced_echelon(generator);
    return LinearCode(std::move(reduced), std::move(pivots));
}

LinearCode LinearCode::from_parity_check(const Matrix& parity_check) {
    LinearCode code = from_generator(kernel_basis(parity_check));
    std::call_once(code.parity_->once, [&] { code.parity_->matrix = parity_check; });
    return code;
}

LinearCode LinearCode::full_space(const Field& field, std::size_t n) {
    return from_generator(Matrix::identity(field, n));
}

LinearCode LinearCode::zero_code(const Field& field, std::size_t n) { return LinearCode(Matrix(field, 0, n), {}); }

const Matrix& LinearCode::parity_check() const {
    std::call_once(parity_->once, [this] { parity_->matrix = kernel_basis(generator_); });
    return *parity_->matrix;
}

Word LinearCode::encode(std::span<const FieldElement> message) const {
    if (message.size() != dimension())
        throw DomainError("message length " + std::to_string(message.size()) + " != dimension " +
                          std::to_string(dimension()));
    return row_times(message, generator_);
}

bool LinearCode::contains(std::span<const FieldElement> word) const {
    if (word.size() != length()) return false;
    const Matrix& h = parity_check();
    const Field& f = field();
    for (std::size_t r = 0; r < h.rows(); ++r) {
        FieldElement acc = f.zero();
        for (std::size_t c = 0; c < word.size(); ++c) acc = f.add(acc, f.mul(h(r, c), word[c]));
        if (acc.value != 0) return false;
    }
    return true;
}

bool operator==(const LinearCode& a, const LinearCode& b) { return a.generator_ == b.generator_; }

} // namespace bsym
