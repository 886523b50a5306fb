fn main() {
    let code = equichow::cli::main_with_args(
        std::env::args_os(),
        std::env::var_os(equichow::cli::SEED_VAR),
    );
    std::process::exit(code);
}
