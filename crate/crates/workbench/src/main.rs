fn main() {
    let outcome = workbench::run(std::env::args_os());
    if outcome.exit_code == 3 || outcome.report.is_none() && outcome.exit_code != 0 {
        eprint!("{}", outcome.text);
    } else {
        print!("{}", outcome.text);
    }
    std::process::exit(outcome.exit_code);
}
