//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS/FAIL line. Run with `cargo test -p blockdct-cli --test acceptance --
//! --nocapture` to see every line.

use std::time::Instant;

use blockdct::{
    assemble_blocks, blockiness_score, build_quant_matrix, deblock_image, degrade,
    dequantize_block, mse, psnr, quantize_block, read_pgm, synth, tile_blocks, write_pgm,
    CoeffBlock, Dct8, DeblockParams, GrayImage, PixelBlock, QualityFactor,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(number: u8, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {number} ({name}): {} [{detail}]",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {number} ({name}) failed: {detail}");
}

fn q(v: u8) -> QualityFactor {
    QualityFactor::new(v).unwrap()
}

fn random_block(rng: &mut ChaCha8Rng) -> PixelBlock {
    let mut samples = [0i16; 64];
    for s in samples.iter_mut() {
        *s = rng.gen_range(-128..=127);
    }
    PixelBlock { samples }
}

/// Literal quadruple-sum DCT used as the independent oracle.
fn dct2d_direct(block: &PixelBlock) -> CoeffBlock<f64> {
    let mut coeffs = [0.0f64; 64];
    for u in 0..8 {
        for v in 0..8 {
            let au = if u == 0 { (1.0f64 / 8.0).sqrt() } else { (2.0f64 / 8.0).sqrt() };
            let av = if v == 0 { (1.0f64 / 8.0).sqrt() } else { (2.0f64 / 8.0).sqrt() };
            let mut sum = 0.0;
            for x in 0..8 {
                for y in 0..8 {
                    sum += block.samples[x * 8 + y] as f64
                        * ((2 * x + 1) as f64 * u as f64 * std::f64::consts::PI / 16.0).cos()
                        * ((2 * y + 1) as f64 * v as f64 * std::f64::consts::PI / 16.0).cos();
                }
            }
            coeffs[u * 8 + v] = au * av * sum;
        }
    }
    CoeffBlock { coeffs }
}

#[test]
fn criterion_1_dct_correctness() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC1);
    let dct = Dct8::<f64>::new();
    let mut max_err = 0.0f64;
    let mut roundtrip_exact = true;
    for _ in 0..1000 {
        let block = random_block(&mut rng);
        let fast = dct.forward(&block);
        let direct = dct2d_direct(&block);
        for (a, b) in fast.coeffs.iter().zip(direct.coeffs.iter()) {
            max_err = max_err.max((a - b).abs());
        }
        roundtrip_exact &= dct.inverse(&fast) == block;
    }
    let elapsed = start.elapsed();
    verdict(
        1,
        "DCT correctness",
        max_err < 1e-9 && roundtrip_exact && elapsed.as_secs_f64() < 5.0,
        &format!("max |fast - direct| = {max_err:.3e}, roundtrip exact = {roundtrip_exact}, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_2_quantization_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC2);
    let dct = Dct8::<f64>::new();
    let mut worst_margin = f64::NEG_INFINITY;
    for &quality in &[1u8, 50, 100] {
        let qm = build_quant_matrix(q(quality));
        for _ in 0..1000 {
            let coeffs = dct.forward(&random_block(&mut rng));
            let recon: CoeffBlock<f64> = dequantize_block(&quantize_block(&coeffs, &qm), &qm);
            for i in 0..64 {
                let err = (coeffs.coeffs[i] - recon.coeffs[i]).abs();
                worst_margin = worst_margin.max(err - qm.steps[i] as f64 / 2.0);
            }
        }
    }
    verdict(
        2,
        "quantization bound",
        worst_margin <= 1e-9,
        &format!("worst |error| - step/2 = {worst_margin:.3e}"),
    );
}

#[test]
fn criterion_3_compression_ratio_envelope() {
    let img = synth::natural_texture(256, 256, 7);
    let mut detail = String::new();
    let mut pass = true;
    for quality in [25u8, 50, 75] {
        let ratio = degrade::<f64>(&img, q(quality)).rate.compression_ratio;
        pass &= (5.0..=50.0).contains(&ratio);
        detail.push_str(&format!("q{quality}: {ratio:.2} "));
    }
    let q90 = degrade::<f64>(&img, q(90));
    let psnr90 = psnr::<f64>(&img, &q90.image).unwrap();
    pass &= psnr90 >= 32.0;
    detail.push_str(&format!("psnr@q90: {psnr90:.2} dB"));
    verdict(3, "compression-ratio envelope", pass, &detail);
}

#[test]
fn criterion_4_artifact_formation() {
    let img = synth::smooth_gradient(256, 256);
    let before = blockiness_score::<f64>(&img).unwrap();
    let after = blockiness_score::<f64>(&degrade::<f64>(&img, q(10)).image).unwrap();
    verdict(
        4,
        "artifact formation",
        after > 1.5 * before,
        &format!("blockiness {before:.3} -> {after:.3}"),
    );
}

#[test]
fn criterion_5_deblocking_claim() {
    let params = DeblockParams::default();
    let mut pass = true;
    let mut detail = String::new();
    for (name, img) in [
        ("smooth", synth::smooth_gradient(256, 256)),
        ("texture", synth::natural_texture(256, 256, 7)),
    ] {
        for quality in [5u8, 10, 25] {
            let degraded = degrade::<f64>(&img, q(quality)).image;
            let deblocked = deblock_image(&degraded, &params).unwrap();
            let gain = psnr::<f64>(&img, &deblocked).unwrap() - psnr::<f64>(&img, &degraded).unwrap();
            pass &= gain > 0.0;
            detail.push_str(&format!("{name}@q{quality}: {gain:+.3} dB "));
            if name == "smooth" && quality == 10 {
                pass &= gain >= 0.1;
                let blk_deg = blockiness_score::<f64>(&degraded).unwrap();
                let blk_deb = blockiness_score::<f64>(&deblocked).unwrap();
                let drop = 1.0 - blk_deb / blk_deg;
                pass &= drop >= 0.20;
                detail.push_str(&format!("(blockiness -{:.0}%) ", drop * 100.0));
            }
        }
    }
    verdict(5, "deblocking claim", pass, detail.trim());
}

#[test]
fn criterion_6_edge_preservation() {
    let params = DeblockParams::default();

    // A step of amplitude 80 aligned to the block boundary at x = 128.
    let step = GrayImage::from_fn(256, 256, |x, _| if x < 128 { 80 } else { 160 });
    let filtered = deblock_image(&step, &params).unwrap();
    let step_preserved = filtered == step;

    // Pixels farther than 2 from every boundary stay put, on any input.
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC6);
    let mut locality = true;
    for _ in 0..20 {
        let w = rng.gen_range(16..80);
        let h = rng.gen_range(16..80);
        let img = GrayImage::from_fn(w, h, |_, _| rng.gen());
        let out = deblock_image(&img, &params).unwrap();
        for y in 0..h {
            for x in 0..w {
                if (2..6).contains(&(x % 8)) && (2..6).contains(&(y % 8)) {
                    locality &= out.get(x, y) == img.get(x, y);
                }
            }
        }
    }
    verdict(
        6,
        "edge preservation",
        step_preserved && locality,
        &format!("aligned step untouched = {step_preserved}, off-boundary locality = {locality}"),
    );
}

#[test]
fn criterion_7_determinism_and_roundtrips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACC7);

    // PGM and tiling round-trips on 100 random images.
    let mut roundtrips = true;
    for _ in 0..100 {
        let w = rng.gen_range(1..48);
        let h = rng.gen_range(1..48);
        let img = GrayImage::from_fn(w, h, |_, _| rng.gen());
        roundtrips &= read_pgm(&write_pgm(&img)).unwrap() == img;
        roundtrips &= assemble_blocks(&tile_blocks(&img)) == img;
    }

    // Identical CLI invocations must produce byte-identical artifacts.
    let dir = tempfile::TempDir::new().unwrap();
    let mut cli_identical = true;
    for trial in 0..100 {
        let img = GrayImage::from_fn(24, 24, |_, _| rng.gen());
        let input = dir.path().join(format!("in{trial}.pgm"));
        std::fs::write(&input, write_pgm(&img)).unwrap();
        // Same argv both times; snapshot the artifacts between runs.
        let out = dir.path().join(format!("out{trial}.pgm"));
        let rep = dir.path().join(format!("rep{trial}.json"));
        let outputs: Vec<(Vec<u8>, Vec<u8>)> = (0..2)
            .map(|_| {
                let status = std::process::Command::new(env!("CARGO_BIN_EXE_blockdct"))
                    .args(["degrade", "--quality", "10"])
                    .arg(&input)
                    .arg(&out)
                    .arg("--report")
                    .arg(&rep)
                    .status()
                    .unwrap();
                assert!(status.success());
                (std::fs::read(&out).unwrap(), std::fs::read(&rep).unwrap())
            })
            .collect();
        cli_identical &= outputs[0] == outputs[1];
    }

    // Same for a curve sweep.
    let input = dir.path().join("curve_in.pgm");
    std::fs::write(&input, write_pgm(&synth::natural_texture(64, 64, 7))).unwrap();
    let curves: Vec<Vec<u8>> = (0..2)
        .map(|run| {
            let out = dir.path().join(format!("curve{run}.csv"));
            let status = std::process::Command::new(env!("CARGO_BIN_EXE_blockdct"))
                .args(["rdcurve", "--qualities", "5,25,75"])
                .arg(&input)
                .arg("--out")
                .arg(&out)
                .status()
                .unwrap();
            assert!(status.success());
            std::fs::read(&out).unwrap()
        })
        .collect();
    cli_identical &= curves[0] == curves[1];

    verdict(
        7,
        "determinism & round-trips",
        roundtrips && cli_identical,
        &format!("roundtrips = {roundtrips}, identical CLI artifacts = {cli_identical}"),
    );
}

#[test]
fn criterion_8_performance_sanity() {
    let img = synth::natural_texture(512, 512, 7);
    let start = Instant::now();
    let degraded = degrade::<f64>(&img, q(10));
    let deblocked = deblock_image(&degraded.image, &DeblockParams::default()).unwrap();
    let _ = mse::<f64>(&img, &deblocked).unwrap();
    let _ = psnr::<f64>(&img, &deblocked).unwrap();
    let _ = blockiness_score::<f64>(&deblocked).unwrap();
    let elapsed = start.elapsed();
    verdict(
        8,
        "performance sanity",
        elapsed.as_secs_f64() < 1.0,
        &format!("degrade + deblock + metrics on 512x512 took {elapsed:.2?}"),
    );
}
