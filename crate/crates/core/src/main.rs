fn main() {
    reset_sigpipe();
    std::process::exit(lgcy::cli::run())
}

// die quietly when the consumer of a pipe goes away, like any line tool
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}
