use std::io::Read;
use std::net::SocketAddr;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use polyideal::job::{
    run_command, CellsInput, Command, Format, HolesInput, JobOptions, JobRequest,
};
use polyideal::server::{serve, ServerConfig};

/// Inner 2-minor ideals, toric ideals and Hilbert series of collections of
/// cells.
#[derive(Parser)]
#[command(name = "polyideal", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Polyomino, connectivity, convexity and hole data.
    Classify(JobArgs),
    /// Generators of the inner 2-minor ideal.
    Ideal(JobArgs),
    /// The matrix of vertex variables, top row first.
    Matrix(JobArgs),
    /// Generators of the toric ideal.
    Toric(JobArgs),
    /// Whether the inner 2-minor ideal equals the toric ideal.
    Compare(JobArgs),
    /// Reduced Gröbner basis of the inner 2-minor ideal.
    Groebner(JobArgs),
    /// Minimal generators of the initial ideal.
    Initial(JobArgs),
    /// Reduced Hilbert series of the quotient ring.
    Hilbert(JobArgs),
    /// Run the JSON service.
    Serve(ServeArgs),
}

#[derive(Args)]
struct JobArgs {
    /// Encoding such as `{{{1,1},{2,2}}}` or `[[[1,1],[2,2]]]`; `-` or
    /// nothing reads standard input.
    input: Option<String>,
    /// Read the encoding from a file.
    #[arg(long, conflicts_with = "input")]
    file: Option<std::path::PathBuf>,
    /// `qq` or `fp:<prime>`.
    #[arg(long, default_value = "qq")]
    field: String,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
    ring_choice: u32,
    #[arg(long, default_value = "lex", value_parser = ["lex", "grevlex"])]
    term_order: String,
    /// `auto` or hole corners such as `{{2,3}}`.
    #[arg(long, default_value = "auto")]
    holes: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seconds before giving up.
    #[arg(long)]
    timeout: Option<f64>,
    /// Drop repeated cells instead of failing.
    #[arg(long)]
    dedupe: bool,
}

#[derive(Args)]
struct ServeArgs {
    #[arg(long, default_value = "127.0.0.1:8765")]
    bind: SocketAddr,
    /// Timeout for requests that do not set one, in seconds; 0 disables it.
    #[arg(long, default_value_t = 300)]
    default_timeout: u64,
}

fn read_input(args: &JobArgs) -> std::io::Result<String> {
    if let Some(path) = &args.file {
        return std::fs::read_to_string(path);
    }
    match args.input.as_deref() {
        Some(s) if s != "-" => Ok(s.to_string()),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn run_job(command: Command, args: JobArgs) -> ExitCode {
    let text = match read_input(&args) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read input: {}", e);
            return ExitCode::from(2);
        }
    };
    let req = JobRequest {
        cells: CellsInput::Text(text),
        command: Some(command),
        options: JobOptions {
            field: args.field,
            ring_choice: args.ring_choice,
            term_order: args.term_order,
            holes: HolesInput::Text(args.holes),
            format: args.format,
            timeout_seconds: args.timeout,
            dedupe: args.dedupe,
        },
    };
    let resp = run_command(&req);
    match args.format {
        Format::Json => println!("{}", resp.to_json()),
        Format::Text => {
            for w in &resp.warnings {
                eprintln!("warning: {}", w);
            }
            if let Some(t) = &resp.text {
                println!("{}", t);
            }
            if let Some(e) = &resp.error {
                eprintln!("error[{}]: {}", e.code, e.message);
            }
        }
    }
    ExitCode::from(resp.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match cli.cmd {
        Cmd::Serve(s) => {
            let config = ServerConfig {
                default_timeout: (s.default_timeout > 0)
                    .then(|| Duration::from_secs(s.default_timeout)),
            };
            let rt = tokio::runtime::Runtime::new().expect("tokio runtime");
            return match rt.block_on(serve(s.bind, config)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {}", e);
                    ExitCode::FAILURE
                }
            };
        }
        Cmd::Classify(a) => (Command::Classify, a),
        Cmd::Ideal(a) => (Command::Ideal, a),
        Cmd::Matrix(a) => (Command::Matrix, a),
        Cmd::Toric(a) => (Command::Toric, a),
        Cmd::Compare(a) => (Command::Compare, a),
        Cmd::Groebner(a) => (Command::Groebner, a),
        Cmd::Initial(a) => (Command::Initial, a),
        Cmd::Hilbert(a) => (Command::Hilbert, a),
    };
    run_job(command, args)
}
