use clap::Parser;

fn main() {
    let cli = match cogrowth::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            std::process::exit(if usage { cogrowth::EXIT_USAGE } else { 0 });
        }
    };
    std::process::exit(cogrowth::execute(&cli));
}
