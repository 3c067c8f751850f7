//! Command-line front end: degrade images, deblock them, measure quality,
//! and sweep rate-distortion curves. Images are binary PGM; reports are flat
//! JSON objects and rate-distortion curves are CSV.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use blockdct::{
    blockiness_score, deblock_image, degrade, mse, psnr, read_pgm, write_pgm, Coeff,
    DeblockParams, GrayImage, QualityFactor,
};

#[derive(Parser)]
#[command(
    name = "blockdct",
    version,
    about = "Block-DCT degradation, deblocking, and quality metrics for PGM images"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FilterOpts {
    /// Boundary gap at or above which a segment counts as a real edge
    #[arg(long, default_value_t = 20)]
    t_edge: u8,
    /// Local activity below which both sides count as flat
    #[arg(long, default_value_t = 8)]
    t_flat: u8,
    /// Correction cap for mildly active boundaries
    #[arg(long, default_value_t = 4)]
    clip: u8,
}

impl FilterOpts {
    fn params(&self) -> Result<DeblockParams, CliError> {
        DeblockParams::new(self.t_edge, self.t_flat, self.clip).map_err(CliError::runtime)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the lossy block-DCT round trip at a quality factor
    Degrade {
        /// Quality factor in [1, 100]; lower is coarser
        #[arg(long)]
        quality: u8,
        /// Input PGM image
        input: PathBuf,
        /// Output PGM image
        output: PathBuf,
        /// Write a JSON report here instead of stdout
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Filter 8x8 block boundaries of a decoded image
    Deblock {
        /// Input PGM image
        input: PathBuf,
        /// Output PGM image
        output: PathBuf,
        #[command(flatten)]
        filter: FilterOpts,
        /// Write a JSON report here instead of stdout
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Measure MSE/PSNR against a reference plus blockiness
    Metrics {
        /// Reference (pristine) PGM image
        #[arg(long = "ref")]
        reference: PathBuf,
        /// Image under test
        image: PathBuf,
        /// Write a JSON report here instead of stdout
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Sweep qualities and emit a rate-distortion CSV
    Rdcurve {
        /// Comma-separated quality factors, e.g. 5,10,25,50,75
        #[arg(long, value_delimiter = ',', required = true)]
        qualities: Vec<u8>,
        /// Input PGM image
        input: PathBuf,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        filter: FilterOpts,
    },
}

/// Flat report object; `psnr_db` is a JSON number or the string "inf".
#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    input: String,
    output: Option<String>,
    quality: Option<u8>,
    mse: Option<f64>,
    psnr_db: Value,
    blockiness: Option<f64>,
    estimated_bits: Option<f64>,
    compression_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_edge: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_flat: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    clip: Option<u8>,
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: 2 }
    }

    fn runtime(err: impl ToString) -> Self {
        CliError { message: err.to_string(), code: 1 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Degrade { quality, input, output, report } => {
            let image = load_image(&input)?;
            let quality = QualityFactor::new(quality).map_err(CliError::runtime)?;
            let result = degrade::<Coeff>(&image, quality);
            save_image(&output, &result.image)?;
            let run = RunReport {
                command: "degrade",
                input: path_string(&input),
                output: Some(path_string(&output)),
                quality: Some(quality.get()),
                mse: Some(mse::<Coeff>(&image, &result.image).map_err(CliError::runtime)?),
                psnr_db: psnr_value(psnr::<Coeff>(&image, &result.image).map_err(CliError::runtime)?),
                blockiness: Some(
                    blockiness_score::<Coeff>(&result.image).map_err(CliError::runtime)?,
                ),
                estimated_bits: Some(result.rate.estimated_bits),
                compression_ratio: Some(result.rate.compression_ratio),
                t_edge: None,
                t_flat: None,
                clip: None,
            };
            emit_report(&run, report.as_deref())
        }
        Command::Deblock { input, output, filter, report } => {
            let image = load_image(&input)?;
            let params = filter.params()?;
            let filtered = deblock_image(&image, &params).map_err(CliError::runtime)?;
            save_image(&output, &filtered)?;
            let run = RunReport {
                command: "deblock",
                input: path_string(&input),
                output: Some(path_string(&output)),
                quality: None,
                mse: Some(mse::<Coeff>(&image, &filtered).map_err(CliError::runtime)?),
                psnr_db: psnr_value(psnr::<Coeff>(&image, &filtered).map_err(CliError::runtime)?),
                blockiness: Some(
                    blockiness_score::<Coeff>(&filtered).map_err(CliError::runtime)?,
                ),
                estimated_bits: None,
                compression_ratio: None,
                t_edge: Some(params.t_edge()),
                t_flat: Some(params.t_flat()),
                clip: Some(params.clip_c()),
            };
            emit_report(&run, report.as_deref())
        }
        Command::Metrics { reference, image, report } => {
            let reference_img = load_image(&reference)?;
            let image_img = load_image(&image)?;
            let run = RunReport {
                command: "metrics",
                input: path_string(&reference),
                output: Some(path_string(&image)),
                quality: None,
                mse: Some(mse::<Coeff>(&reference_img, &image_img).map_err(CliError::runtime)?),
                psnr_db: psnr_value(
                    psnr::<Coeff>(&reference_img, &image_img).map_err(CliError::runtime)?,
                ),
                blockiness: Some(
                    blockiness_score::<Coeff>(&image_img).map_err(CliError::runtime)?,
                ),
                estimated_bits: None,
                compression_ratio: None,
                t_edge: None,
                t_flat: None,
                clip: None,
            };
            emit_report(&run, report.as_deref())
        }
        Command::Rdcurve { qualities, input, out, filter } => {
            let image = load_image(&input)?;
            let params = filter.params()?;
            let csv = rdcurve(&image, &qualities, &params)?;
            match out {
                Some(path) => fs::write(&path, csv)
                    .map_err(|e| CliError::runtime(format!("writing {}: {e}", path.display()))),
                None => {
                    print!("{csv}");
                    Ok(())
                }
            }
        }
    }
}

/// One CSV row per quality, ascending; columns fixed by the header.
fn rdcurve(image: &GrayImage, qualities: &[u8], params: &DeblockParams) -> Result<String, CliError> {
    let mut sorted: Vec<u8> = qualities.to_vec();
    sorted.sort_unstable();
    sorted.dedup();

    let mut csv = String::from(
        "quality,ratio,psnr_degraded,psnr_deblocked,blockiness_degraded,blockiness_deblocked\n",
    );
    for &q in &sorted {
        let quality = QualityFactor::new(q).map_err(CliError::runtime)?;
        let result = degrade::<Coeff>(image, quality);
        let deblocked = deblock_image(&result.image, params).map_err(CliError::runtime)?;
        let row = (
            psnr::<Coeff>(image, &result.image).map_err(CliError::runtime)?,
            psnr::<Coeff>(image, &deblocked).map_err(CliError::runtime)?,
            blockiness_score::<Coeff>(&result.image).map_err(CliError::runtime)?,
            blockiness_score::<Coeff>(&deblocked).map_err(CliError::runtime)?,
        );
        csv.push_str(&format!(
            "{q},{},{},{},{},{}\n",
            result.rate.compression_ratio, row.0, row.1, row.2, row.3
        ));
    }
    Ok(csv)
}

fn psnr_value(psnr: f64) -> Value {
    if psnr.is_infinite() {
        Value::String("inf".into())
    } else {
        Value::from(psnr)
    }
}

fn path_string(path: &Path) -> String {
    path.display().to_string()
}

/// A missing or unreadable input file is a usage error (exit 2); malformed
/// image data is a runtime error (exit 1).
fn load_image(path: &Path) -> Result<GrayImage, CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    read_pgm(&bytes).map_err(|e| CliError::runtime(format!("{}: {e}", path.display())))
}

fn save_image(path: &Path, image: &GrayImage) -> Result<(), CliError> {
    fs::write(path, write_pgm(image))
        .map_err(|e| CliError::runtime(format!("writing {}: {e}", path.display())))
}

fn emit_report(report: &RunReport, path: Option<&Path>) -> Result<(), CliError> {
    let json = serde_json::to_string_pretty(report)
        .map_err(|e| CliError::runtime(format!("serializing report: {e}")))?;
    match path {
        Some(path) => fs::write(path, json + "\n")
            .map_err(|e| CliError::runtime(format!("writing {}: {e}", path.display()))),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}
