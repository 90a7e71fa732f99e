#include "bwtkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>

namespace bwtkit::io {

namespace {

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw malformed_input("cannot open file: " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> split_records(const std::vector<std::uint8_t>& bytes,
                                       collection_format fmt) {
    std::vector<std::string> out;
    if (fmt == collection_format::lines) {
        std::string cur;
        for (std::uint8_t b : bytes) {
            if (b == '\n') {
                if (!cur.empty() && cur.back() == '\r') cur.pop_back();
                out.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(char(b));
            }
        }
        if (!cur.empty()) out.push_back(cur);
    } else {
        std::string cur;
        bool in_record = false;
        std::size_t i = 0;
        while (i < bytes.size()) {
            std::size_t j = i;
            while (j < bytes.size() && bytes[j] != '\n') ++j;
            std::string line(bytes.begin() + i, bytes.begin() + j);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty() && line[0] == '>') {
                if (in_record) out.push_back(cur);
                cur.clear();
                in_record = true;
            } else if (in_record) {
                for (char ch : line) cur.push_back(char(std::toupper(std::uint8_t(ch))));
            } else if (!line.empty()) {
                throw malformed_input("fasta: sequence data before first header");
            }
            i = j + 1;
        }
        if (in_record) out.push_back(cur);
    }
    return out;
}

void append_le(std::vector<std::uint8_t>& out, std::uint64_t v, unsigned width) {
    for (unsigned b = 0; b < width; ++b) out.push_back(std::uint8_t((v >> (8 * b)) & 0xFF));
}

} // namespace

alphabet_map make_alphabet(const std::vector<std::uint8_t>& bytes, std::uint8_t term_byte) {
    alphabet_map m;
    m.terminator_byte = term_byte;
    m.byte_to_code.fill(-1);
    std::set<std::uint8_t> distinct(bytes.begin(), bytes.end());
    distinct.erase(term_byte);
    m.code_to_byte.push_back(term_byte);
    m.byte_to_code[term_byte] = 0;
    for (std::uint8_t b : distinct) {
        m.byte_to_code[b] = int(m.code_to_byte.size());
        m.code_to_byte.push_back(b);
    }
    if (m.code_to_byte.size() < 2) {
        /* keep sigma >= 2 even for terminator-only content */
        std::uint8_t filler = term_byte == 0xFF ? 0x00 : std::uint8_t(term_byte + 1);
        m.byte_to_code[filler] = 1;
        m.code_to_byte.push_back(filler);
    }
    return m;
}

loaded_collection collection_from_strings(const std::vector<std::string>& strings,
                                          std::uint8_t term_byte) {
    if (strings.empty()) throw malformed_input("collection: empty input");
    std::vector<std::uint8_t> occurring;
    for (const auto& s : strings)
        for (char ch : s) {
            if (std::uint8_t(ch) == term_byte)
                throw malformed_input("collection: terminator byte inside a string");
            if (std::uint8_t(ch) == 0)
                throw malformed_input("collection: NUL byte inside a string");
            occurring.push_back(std::uint8_t(ch));
        }
    loaded_collection lc;
    lc.map = make_alphabet(occurring, term_byte);
    lc.coll.sigma = lc.map.sigma();
    for (const auto& s : strings) {
        std::vector<sym_t> codes;
        codes.reserve(s.size() + 1);
        for (char ch : s) codes.push_back(sym_t(lc.map.byte_to_code[std::uint8_t(ch)]));
        codes.push_back(TERM);
        lc.coll.strings.push_back(std::move(codes));
    }
    oracle::validate(lc.coll);
    return lc;
}

loaded_collection read_collection(const std::string& path, collection_format fmt,
                                  std::uint8_t term_byte) {
    auto records = split_records(read_file_bytes(path), fmt);
    if (records.empty()) throw malformed_input("collection: empty input file: " + path);
    for (const auto& r : records)
        if (r.empty()) throw malformed_input("collection: empty record in " + path);
    return collection_from_strings(records, term_byte);
}

namespace {

/* two collections coded over one shared alphabet */
std::pair<loaded_collection, loaded_collection> read_collection_pair(
    const std::string& path1, const std::string& path2, collection_format fmt,
    std::uint8_t term_byte) {
    auto rec1 = split_records(read_file_bytes(path1), fmt);
    auto rec2 = split_records(read_file_bytes(path2), fmt);
    if (rec1.empty() || rec2.empty()) throw malformed_input("collection: empty input file");
    std::vector<std::uint8_t> occurring;
    for (const auto* recs : {&rec1, &rec2})
        for (const auto& r : *recs) {
            if (r.empty()) throw malformed_input("collection: empty record");
            for (char ch : r) {
                if (std::uint8_t(ch) == term_byte)
                    throw malformed_input("collection: terminator byte inside a string");
                if (std::uint8_t(ch) == 0)
                    throw malformed_input("collection: NUL byte inside a string");
                occurring.push_back(std::uint8_t(ch));
            }
        }
    alphabet_map map = make_alphabet(occurring, term_byte);
    auto build = [&](const std::vector<std::string>& recs) {
        loaded_collection lc;
        lc.map = map;
        lc.coll.sigma = map.sigma();
        for (const auto& s : recs) {
            std::vector<sym_t> codes;
            for (char ch : s) codes.push_back(sym_t(map.byte_to_code[std::uint8_t(ch)]));
            codes.push_back(TERM);
            lc.coll.strings.push_back(std::move(codes));
        }
        oracle::validate(lc.coll);
        return lc;
    };
    return {build(rec1), build(rec2)};
}

} // namespace

bwt_data read_bwt_file(const std::string& path, std::uint8_t term_byte) {
    auto bytes = read_file_bytes(path);
    if (bytes.empty()) throw malformed_input("bwt file is empty: " + path);
    bwt_data d;
    d.map = make_alphabet(bytes, term_byte);
    d.codes.reserve(bytes.size());
    bool has_term = false;
    for (std::uint8_t b : bytes) {
        d.codes.push_back(sym_t(d.map.byte_to_code[b]));
        has_term |= b == term_byte;
    }
    if (!has_term) throw malformed_input("bwt file has no terminator: " + path);
    return d;
}

std::pair<bwt_data, bwt_data> read_bwt_pair(const std::string& path1, const std::string& path2,
                                            std::uint8_t term_byte) {
    auto b1 = read_file_bytes(path1);
    auto b2 = read_file_bytes(path2);
    if (b1.empty() || b2.empty()) throw malformed_input("bwt file is empty");
    std::vector<std::uint8_t> all(b1);
    all.insert(all.end(), b2.begin(), b2.end());
    alphabet_map m = make_alphabet(all, term_byte);
    auto convert = [&](const std::vector<std::uint8_t>& bytes, const std::string& path) {
        bwt_data d;
        d.map = m;
        bool has_term = false;
        for (std::uint8_t b : bytes) {
            d.codes.push_back(sym_t(m.byte_to_code[b]));
            has_term |= b == term_byte;
        }
        if (!has_term) throw malformed_input("bwt file has no terminator: " + path);
        return d;
    };
    return {convert(b1, path1), convert(b2, path2)};
}

void write_bytes_atomic(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw malformed_input("cannot write file: " + tmp);
        out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
        if (!out) throw malformed_input("short write: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

void write_bwt_file(const std::string& path, const std::vector<sym_t>& codes,
                    const alphabet_map& map) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(codes.size());
    for (sym_t c : codes) bytes.push_back(map.code_to_byte[c]);
    write_bytes_atomic(path, bytes);
}

unsigned min_lcp_width(std::uint64_t max_value) {
    if (max_value <= 0xFF) return 1;
    if (max_value <= 0xFFFF) return 2;
    if (max_value <= 0xFFFFFFFFULL) return 4;
    return 8;
}

void write_lcp_file(const std::string& path, const lcp_array& lcp, unsigned width) {
    if (width != 1 && width != 2 && width != 4 && width != 8)
        throw std::invalid_argument("lcp width must be 1, 2, 4 or 8");
    std::uint64_t maxv = lcp.max_value();
    unsigned need = min_lcp_width(maxv);
    if (need > width)
        throw width_overflow("lcp value " + std::to_string(maxv) + " does not fit in " +
                                 std::to_string(width) + " byte(s); minimum width is " +
                                 std::to_string(need),
                             need);
    std::vector<std::uint8_t> bytes;
    bytes.reserve(lcp.size() * width);
    for (pos_t i = 1; i <= lcp.size(); ++i) append_le(bytes, lcp.value(i), width);
    write_bytes_atomic(path, bytes);
}

std::vector<std::uint64_t> read_lcp_file(const std::string& path, unsigned width) {
    auto bytes = read_file_bytes(path);
    if (width == 0 || bytes.size() % width != 0)
        throw malformed_input("lcp file size is not a multiple of the width: " + path);
    std::vector<std::uint64_t> out(bytes.size() / width, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (unsigned b = 0; b < width; ++b)
            out[i] |= std::uint64_t(bytes[i * width + b]) << (8 * b);
    return out;
}

void write_da_file(const std::string& path, const document_array& da, bool packed) {
    std::vector<std::uint8_t> bytes;
    if (packed) {
        bytes.assign((da.size() + 7) / 8, 0);
        for (pos_t i = 1; i <= da.size(); ++i)
            if (da[i]) bytes[(i - 1) / 8] |= std::uint8_t(1u << ((i - 1) % 8));
    } else {
        bytes.reserve(da.size());
        for (pos_t i = 1; i <= da.size(); ++i) bytes.push_back(da[i] ? '1' : '0');
    }
    write_bytes_atomic(path, bytes);
}

document_array read_da_file(const std::string& path, bool packed, pos_t n) {
    auto bytes = read_file_bytes(path);
    std::vector<std::uint8_t> staged(n, 0);
    if (packed) {
        if (bytes.size() != (n + 7) / 8) throw malformed_input("da file size mismatch: " + path);
        for (pos_t i = 0; i < n; ++i) staged[i] = (bytes[i / 8] >> (i % 8)) & 1;
    } else {
        if (bytes.size() != n) throw malformed_input("da file size mismatch: " + path);
        for (pos_t i = 0; i < n; ++i) {
            if (bytes[i] != '0' && bytes[i] != '1')
                throw malformed_input("da file has a byte that is not '0'/'1': " + path);
            staged[i] = bytes[i] == '1';
        }
    }
    return document_array(staged);
}

/* ---- command pipelines ------------------------------------------- */

namespace {

bool prefer_packed(backend_kind k, std::uint32_t sigma) {
    if (k == backend_kind::packed) {
        if (!packed_text::supports(sigma))
            throw std::invalid_argument("packed backend requires sigma <= 8");
        return true;
    }
    return k == backend_kind::automatic && packed_text::supports(sigma);
}

void print_stats_line(std::ostream& err, const char* tool, pos_t n, std::uint32_t sigma,
                      const traversal_stats& st) {
    err << tool << ": n=" << n << " sigma=" << sigma << " node_strategy=" << st.node_strategy
        << " leaf_strategy=" << st.leaf_strategy << " queue_pushes=" << st.queue_pushes
        << " peak_stack=" << st.peak_stack_items << " peak_aux_bits=" << st.peak_aux_bits
        << " (" << double(st.peak_aux_bits) / double(n ? n : 1) << " per symbol)\n";
}

template <class Text>
int lcp_pipeline(const bwt_data& bwt, const lcp_options& opt, std::ostream& err) {
    Text st(bwt.codes, bwt.map.sigma());
    traversal_stats stats;
    lcp_array lcp = build_lcp(st, opt.algorithm, &stats);
    write_lcp_file(opt.lcp_out, lcp, opt.lcp_bytes);
    print_stats_line(err, "lcp", st.size(), st.sigma(), stats);
    return 0;
}

template <class Text>
int merge_pipeline(const bwt_data& b1, const bwt_data& b2, const merge_options& opt,
                   std::ostream& err) {
    Text st1(b1.codes, b1.map.sigma());
    Text st2(b2.codes, b2.map.sigma());
    traversal_stats stats;
    document_array da;
    if (!opt.lcp_out.empty()) {
        algo_options aopts;
        aopts.leaf = opt.algorithm;
        aopts.node = opt.node_algorithm;
        auto [d, lcp] = merge_with_lcp(st1, st2, aopts, &stats);
        da = std::move(d);
        write_lcp_file(opt.lcp_out, lcp, opt.lcp_bytes);
    } else {
        da = merge_da(st1, st2, opt.algorithm, &stats);
    }
    write_da_file(opt.da_out, da, opt.packed_da);
    if (!opt.bwt_out.empty()) {
        std::vector<std::uint8_t> merged;
        merged.reserve(da.size());
        interleave(b1.codes, b2.codes, da,
                   [&](sym_t c) { merged.push_back(b1.map.code_to_byte[c]); });
        write_bytes_atomic(opt.bwt_out, merged);
    }
    print_stats_line(err, "merge", st1.size() + st2.size(), st1.sigma(), stats);
    return 0;
}

} // namespace

int run_build_bwt(const build_bwt_options& opt, std::ostream& err) {
    try {
        auto lc = read_collection(opt.input, opt.format, opt.terminator);
        auto bwt = oracle::naive_bwt(lc.coll);
        write_bwt_file(opt.output, bwt, lc.map);
        err << "build-bwt: n=" << bwt.size() << " sigma=" << lc.map.sigma() << " strings="
            << lc.coll.strings.size() << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "build-bwt: error: " << e.what() << "\n";
        return 1;
    }
}

int run_lcp(const lcp_options& opt, std::ostream& err) {
    try {
        auto bwt = read_bwt_file(opt.bwt_in, opt.terminator);
        bool packed = prefer_packed(opt.backend, bwt.map.sigma());
        err << "lcp: backend=" << (packed ? "packed" : "wavelet") << "\n";
        return packed ? lcp_pipeline<packed_text>(bwt, opt, err)
                      : lcp_pipeline<wt_text>(bwt, opt, err);
    } catch (const width_overflow& e) {
        err << "lcp: error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "lcp: error: " << e.what() << "\n";
        return 1;
    }
}

int run_merge(const merge_options& opt, std::ostream& err) {
    try {
        auto [b1, b2] = read_bwt_pair(opt.bwt1_in, opt.bwt2_in, opt.terminator);
        bool packed = prefer_packed(opt.backend, b1.map.sigma());
        err << "merge: backend=" << (packed ? "packed" : "wavelet") << "\n";
        return packed ? merge_pipeline<packed_text>(b1, b2, opt, err)
                      : merge_pipeline<wt_text>(b1, b2, opt, err);
    } catch (const width_overflow& e) {
        err << "merge: error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "merge: error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

/* first mismatch between two byte sequences, or -1 */
template <class A, class B>
long long first_mismatch(const A& a, const B& b) {
    std::size_t n = std::min<std::size_t>(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (std::uint64_t(a[i]) != std::uint64_t(b[i])) return (long long)i;
    if (a.size() != b.size()) return (long long)n;
    return -1;
}

} // namespace

int run_verify(const verify_options& opt, std::ostream& err) {
    try {
        int rc = 0;
        auto check = [&](const char* what, long long mismatch) {
            if (mismatch < 0) {
                err << "verify: " << what << ": ok\n";
            } else {
                err << "verify: " << what << ": mismatch at index " << mismatch + 1 << "\n";
                rc = 2;
            }
        };
        if (opt.input2.empty()) {
            auto c1 = read_collection(opt.input, opt.format, opt.terminator);
            if (!opt.bwt_file.empty()) {
                auto expected = oracle::naive_bwt(c1.coll);
                std::vector<std::uint8_t> exp_bytes;
                for (sym_t c : expected) exp_bytes.push_back(c1.map.code_to_byte[c]);
                check("bwt", first_mismatch(exp_bytes, read_file_bytes(opt.bwt_file)));
            }
            if (!opt.lcp_file.empty())
                check("lcp", first_mismatch(oracle::naive_lcp(c1.coll),
                                            read_lcp_file(opt.lcp_file, opt.lcp_bytes)));
        } else {
            auto [c1, c2] =
                read_collection_pair(opt.input, opt.input2, opt.format, opt.terminator);
            auto uni = oracle::concat(c1.coll, c2.coll);
            if (!opt.da_file.empty()) {
                auto expected = oracle::naive_da(c1.coll, c2.coll);
                auto got = read_da_file(opt.da_file, opt.packed_da, expected.size());
                check("da", first_mismatch(expected, got.to_bytes()));
            }
            if (!opt.bwt_file.empty()) {
                auto expected = oracle::naive_bwt(uni);
                std::vector<std::uint8_t> exp_bytes;
                for (sym_t c : expected) exp_bytes.push_back(c1.map.code_to_byte[c]);
                check("bwt", first_mismatch(exp_bytes, read_file_bytes(opt.bwt_file)));
            }
            if (!opt.lcp_file.empty())
                check("lcp", first_mismatch(oracle::naive_lcp(uni),
                                            read_lcp_file(opt.lcp_file, opt.lcp_bytes)));
        }
        return rc;
    } catch (const std::exception& e) {
        err << "verify: error: " << e.what() << "\n";
        return 1;
    }
}

int run_stats(const stats_options& opt, std::ostream& out) {
    try {
        auto bwt = read_bwt_file(opt.bwt_in, opt.terminator);
        pos_t n = bwt.codes.size();
        std::uint32_t sigma = bwt.map.sigma();
        std::vector<pos_t> counts(sigma, 0);
        for (sym_t c : bwt.codes) ++counts[c];
        out << "n: " << n << "\n";
        out << "sigma: " << sigma << "\n";
        out << "strings: " << counts[TERM] << "\n";
        for (std::uint32_t c = 0; c < sigma; ++c) {
            char byte = char(bwt.map.code_to_byte[c]);
            out << "count[" << (c == TERM ? std::string("terminator") : std::string(1, byte))
                << "]: " << counts[c] << "\n";
        }
        out << "backend: " << (packed_text::supports(sigma) ? "packed" : "wavelet") << "\n";
        out << "node_strategy: " << (bgos_preferred(n, sigma) ? "bgos" : "stack") << "\n";
        out << "leaf_strategy: " << (queue_preferred(n, sigma) ? "queue" : "stack") << "\n";
        return 0;
    } catch (const std::exception& e) {
        out << "stats: error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace bwtkit::io
