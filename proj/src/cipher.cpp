#include "lsscrypt/cipher.hpp"

#include <stdexcept>

namespace lsscrypt {

MasterKey::MasterKey(ChaosParams p, int iters) : params(p), iterations(iters) {
    if (iters < 1) throw std::invalid_argument("MasterKey: iterations must be >= 1");
}

KeySchedule derive_schedule(const MasterKey& key) {
    ChaosStream master(key.params);
    double r = key.params.r();
    double seeds[7];
    for (double& s : seeds) {
        int attempts = 0;
        do {
            // exact zero is the map's fixed point and cannot seed a stage
            if (++attempts > 100)
                throw std::domain_error("derive_schedule: key orbit collapsed to the fixed point");
            s = master.next();
        } while (s == 0.0);
    }
    return KeySchedule{
        ChaosParams(r, seeds[0]), ChaosParams(r, seeds[1]), ChaosParams(r, seeds[2]),
        ChaosParams(r, seeds[3]), ChaosParams(r, seeds[4]), ChaosParams(r, seeds[5]),
        ChaosParams(r, seeds[6]),
    };
}

namespace {

struct StageMaterial {
    PermVector rows;
    PermVector cols;
    SBoxTriple triple;
    SelectorStream selector;
    MaskMatrix mask;
};

StageMaterial expand_key(const MasterKey& key, int height, int width) {
    KeySchedule ks = derive_schedule(key);
    StageMaterial m;

    ChaosStream row_stream(ks.row_perm);
    ChaosStream col_stream(ks.col_perm);
    m.rows = argsort_keys(row_stream.take(static_cast<std::size_t>(height)));
    m.cols = argsort_keys(col_stream.take(static_cast<std::size_t>(width)));

    ChaosStream s1(ks.sbox1), s2(ks.sbox2), s3(ks.sbox3);
    m.triple = SBoxTriple{{build_sbox(s1), build_sbox(s2), build_sbox(s3)}};

    ChaosStream sel_stream(ks.selector);
    m.selector = mod3_selector_stream(sel_stream, static_cast<std::size_t>(height) * width);

    ChaosStream mask_stream(ks.mask);
    m.mask = evolve_mask(seed_mask_matrix(mask_stream), key.iterations);
    return m;
}

void check_size(const GrayImage& img) {
    if (!tileable16(img))
        throw std::invalid_argument("cipher: image dimensions must be multiples of 16");
}

} // namespace

GrayImage xor_tiled_mask(const GrayImage& img, const MaskMatrix& mask) {
    check_size(img);
    GrayImage out(img.height, img.width);
    #pragma omp parallel for schedule(static)
    for (int i = 0; i < img.height; ++i) {
        const std::uint8_t* mask_row = &mask.bytes[static_cast<std::size_t>(i % 16) * 16];
        const std::uint8_t* src = &img.pixels[static_cast<std::size_t>(i) * img.width];
        std::uint8_t* dst = &out.pixels[static_cast<std::size_t>(i) * img.width];
        for (int j = 0; j < img.width; ++j) dst[j] = src[j] ^ mask_row[j % 16];
    }
    return out;
}

GrayImage encrypt(const GrayImage& img, const MasterKey& key) {
    check_size(img);
    StageMaterial m = expand_key(key, img.height, img.width);
    GrayImage shuffled = shuffle_image(img, m.rows, m.cols);
    GrayImage substituted = substitute_image(shuffled, m.triple, m.selector);
    return xor_tiled_mask(substituted, m.mask);
}

GrayImage decrypt(const GrayImage& img, const MasterKey& key) {
    check_size(img);
    StageMaterial m = expand_key(key, img.height, img.width);
    GrayImage substituted = xor_tiled_mask(img, m.mask);
    GrayImage shuffled = unsubstitute_image(substituted, m.triple, m.selector);
    return unshuffle_image(shuffled, m.rows, m.cols);
}

GrayImage encrypt_traced(const GrayImage& img, const MasterKey& key, CipherTrace& trace) {
    check_size(img);
    StageMaterial m = expand_key(key, img.height, img.width);
    trace.shuffled = shuffle_image(img, m.rows, m.cols);
    trace.substituted = substitute_image(trace.shuffled, m.triple, m.selector);
    trace.mask_tile = tile_mask(m.mask, img.height, img.width);
    trace.ciphertext = xor_tiled_mask(trace.substituted, m.mask);
    return trace.ciphertext;
}

} // namespace lsscrypt
