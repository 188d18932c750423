use clap::Parser;

fn main() {
    let cli = selfsim_cli::Cli::parse();
    let out = selfsim_cli::run(cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
