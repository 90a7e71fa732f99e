#include "bwtkit/packed_text.hpp"

namespace bwtkit {

packed_text::packed_text(std::span<const sym_t> codes, std::uint32_t sigma) {
    if (codes.empty()) throw std::invalid_argument("packed_text: empty sequence");
    if (!supports(sigma)) throw std::invalid_argument("packed_text: sigma out of range (2..8)");
    for (sym_t c : codes)
        if (std::uint32_t(c) >= sigma) throw std::invalid_argument("packed_text: symbol code >= sigma");

    n_ = codes.size();
    sigma_ = sigma;

    /* one spare block/superblock so that prefix queries at i = n+1 stay
     * in bounds even when n is a multiple of the block size */
    blocks_.assign(n_ / 128 + 1, block{});
    super_.assign((n_ >> SUPER_LOG) + 1, super_entry{});

    std::array<std::uint64_t, 8> abs{};  // absolute counts so far
    std::array<std::uint32_t, 8> rel{};  // counts within current superblock
    for (pos_t p = 0; p < n_; ++p) {
        if ((p & 127) == 0) {
            if ((p >> SUPER_LOG) << SUPER_LOG == p) {
                super_[p >> SUPER_LOG] = abs;
                rel.fill(0);
            }
            blocks_[p >> 7].rel = rel;
        }
        sym_t c = codes[p];
        blocks_[p >> 7].data[(p & 127) >> 4] |= std::uint64_t(c) << (4 * (p & 15));
        ++abs[c];
        ++rel[c];
    }
    /* tail block/superblock counters */
    if ((n_ & 127) == 0) {
        if ((n_ >> SUPER_LOG) << SUPER_LOG == n_) {
            super_[n_ >> SUPER_LOG] = abs;
            rel.fill(0);
        }
        blocks_[n_ >> 7].rel = rel;
    }

    cum_[0] = 0;
    for (std::uint32_t c = 0; c < 8; ++c)
        cum_[c + 1] = cum_[c] + abs[c];
}

} // namespace bwtkit
