fn main() -> std::process::ExitCode {
    std::process::ExitCode::from(semiring_cholesky::cli::run())
}
