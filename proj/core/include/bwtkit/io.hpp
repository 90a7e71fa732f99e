/*
 * io.hpp
 *
 * File formats and the command pipelines behind the CLI.
 *
 *  - collections: one string per line, or FASTA ('>'-headed records,
 *    sequence lines concatenated and uppercased)
 *  - BWT files: raw bytes, terminator byte '#' (0x23) by default,
 *    alphabet inferred from content and mapped to dense codes with the
 *    terminator at 0 and remaining bytes in ascending order
 *  - LCP files: little-endian fixed-width integers, 1/2/4/8 bytes
 *  - DA files: packed bits LSB-first within bytes (default) or ASCII
 *    '0'/'1' for debugging
 *
 * Output files are written atomically (temp file + rename). The
 * command functions return process exit codes and print diagnostics to
 * the given stream, so the CLI stays a thin flag parser and tests can
 * call the commands directly.
 */

#ifndef BWTKIT_IO_HPP_
#define BWTKIT_IO_HPP_

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "merge.hpp"
#include "oracle.hpp"
#include "packed_text.hpp"
#include "wavelet_tree.hpp"

namespace bwtkit::io {

inline constexpr std::uint8_t DEFAULT_TERMINATOR = '#';

/* byte <-> dense code mapping; terminator byte maps to code 0 */
struct alphabet_map {
    std::array<int, 256> byte_to_code{};
    std::vector<std::uint8_t> code_to_byte;
    std::uint8_t terminator_byte = DEFAULT_TERMINATOR;

    std::uint32_t sigma() const { return std::uint32_t(code_to_byte.size()); }
};

/* builds the mapping for a set of occurring bytes (terminator excluded
 * from `bytes`); sigma is clamped to at least 2 */
alphabet_map make_alphabet(const std::vector<std::uint8_t>& bytes, std::uint8_t term_byte);

enum class collection_format { lines, fasta };

struct loaded_collection {
    oracle::collection coll;
    alphabet_map map;
};

loaded_collection read_collection(const std::string& path, collection_format fmt,
                                  std::uint8_t term_byte = DEFAULT_TERMINATOR);

/* in-memory variant used by tests and by read_collection itself */
loaded_collection collection_from_strings(const std::vector<std::string>& strings,
                                          std::uint8_t term_byte = DEFAULT_TERMINATOR);

struct bwt_data {
    std::vector<sym_t> codes;
    alphabet_map map;
};

bwt_data read_bwt_file(const std::string& path, std::uint8_t term_byte = DEFAULT_TERMINATOR);

/* reads two BWT files over the union alphabet, so codes agree */
std::pair<bwt_data, bwt_data> read_bwt_pair(const std::string& path1, const std::string& path2,
                                            std::uint8_t term_byte = DEFAULT_TERMINATOR);

void write_bytes_atomic(const std::string& path, const std::vector<std::uint8_t>& bytes);

void write_bwt_file(const std::string& path, const std::vector<sym_t>& codes,
                    const alphabet_map& map);

unsigned min_lcp_width(std::uint64_t max_value);

/* throws width_overflow naming the minimum sufficient width */
void write_lcp_file(const std::string& path, const lcp_array& lcp, unsigned width);
std::vector<std::uint64_t> read_lcp_file(const std::string& path, unsigned width);

void write_da_file(const std::string& path, const document_array& da, bool packed);
document_array read_da_file(const std::string& path, bool packed, pos_t n);

/* ---- command pipelines ----------------------------------------------
 * exit codes: 0 ok, 1 usage/format error, 2 verification mismatch,
 * 3 LCP width overflow */

enum class backend_kind { automatic, wavelet, packed };

struct build_bwt_options {
    std::string input, output;
    collection_format format = collection_format::lines;
    std::uint8_t terminator = DEFAULT_TERMINATOR;
};
int run_build_bwt(const build_bwt_options& opt, std::ostream& err);

struct lcp_options {
    std::string bwt_in, lcp_out;
    unsigned lcp_bytes = 4;
    lcp_strategy algorithm = lcp_strategy::automatic;
    backend_kind backend = backend_kind::automatic;
    std::uint8_t terminator = DEFAULT_TERMINATOR;
};
int run_lcp(const lcp_options& opt, std::ostream& err);

struct merge_options {
    std::string bwt1_in, bwt2_in, da_out;
    std::string bwt_out; // optional
    std::string lcp_out; // optional: compute the LCP of the union while merging
    unsigned lcp_bytes = 4;
    container_kind algorithm = container_kind::automatic;
    lcp_strategy node_algorithm = lcp_strategy::automatic;
    backend_kind backend = backend_kind::automatic;
    bool packed_da = true;
    std::uint8_t terminator = DEFAULT_TERMINATOR;
};
int run_merge(const merge_options& opt, std::ostream& err);

struct verify_options {
    std::string input, input2; // input2 selects the pair (merge) mode
    collection_format format = collection_format::lines;
    std::string bwt_file, lcp_file, da_file;
    unsigned lcp_bytes = 4;
    bool packed_da = true;
    std::uint8_t terminator = DEFAULT_TERMINATOR;
};
int run_verify(const verify_options& opt, std::ostream& err);

struct stats_options {
    std::string bwt_in;
    std::uint8_t terminator = DEFAULT_TERMINATOR;
};
int run_stats(const stats_options& opt, std::ostream& out);

} // namespace bwtkit::io

#endif
