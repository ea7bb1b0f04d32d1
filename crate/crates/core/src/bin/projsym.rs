use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use projsym::cli::{run, ErrorKind, Request, Response};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
}

/// Reads one JSON request from stdin and writes the response to stdout.
#[derive(Parser, Debug)]
#[command(name = "projsym", version)]
struct Args {
    /// Dimension, overriding the request's "n".
    #[arg(long)]
    n: Option<usize>,
    /// "formal" or a rational weight, overriding the request's "lambda".
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Seed for randomized sweeps.
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut input = String::new();
    let resp = match std::io::stdin().read_to_string(&mut input) {
        Err(e) => Response::error(ErrorKind::Usage, format!("stdin: {e}")),
        Ok(_) => match serde_json::from_str::<Request>(&input) {
            Err(e) => Response::error(ErrorKind::Usage, format!("request: {e}")),
            Ok(mut req) => {
                req.n = args.n.or(req.n);
                req.lambda = args.lambda.clone().or(req.lambda);
                req.seed = args.seed.or(req.seed);
                run(&req)
            }
        },
    };
    match (args.format, &resp.latex) {
        (Format::Latex, Some(tex)) => println!("{tex}"),
        _ => println!("{}", serde_json::to_string_pretty(&resp.body).expect("serializable")),
    }
    ExitCode::from(resp.status as u8)
}
