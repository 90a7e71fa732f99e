#include "bwtkit/bit_vector.hpp"

namespace bwtkit {

void bit_vector::finalize() {
    assert(!built_);
    super_.assign((n_ >> SUPER_LOG) + 1, 0);
    block_.assign((n_ >> BLOCK_LOG) + 1, 0);

    pos_t total = 0;   // absolute count
    pos_t in_super = 0; // count within current superblock
    pos_t nblocks = (n_ >> BLOCK_LOG) + 1;
    for (pos_t b = 0; b < nblocks; ++b) {
        if ((b << BLOCK_LOG) % (pos_t(1) << SUPER_LOG) == 0) {
            super_[(b << BLOCK_LOG) >> SUPER_LOG] = total;
            in_super = 0;
        }
        block_[b] = std::uint16_t(in_super);
        pos_t w0 = b << (BLOCK_LOG - 6);
        pos_t w1 = std::min<pos_t>(w0 + (pos_t(1) << (BLOCK_LOG - 6)), words_.size());
        for (pos_t w = w0; w < w1; ++w) {
            unsigned p = unsigned(std::popcount(words_[w]));
            total += p;
            in_super += p;
        }
    }
    built_ = true;
}

} // namespace bwtkit
