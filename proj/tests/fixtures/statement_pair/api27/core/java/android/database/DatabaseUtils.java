package android.database;

import java.util.Locale;

/**
 * Static utility methods for dealing with databases and {@link Cursor}s.
 */
public class DatabaseUtils {
    private static final String TAG = "DatabaseUtils";

    public static final int STATEMENT_SELECT = 1;
    public static final int STATEMENT_ABORT = 6;
    public static final int STATEMENT_OTHER = 99;

    /**
     * Returns one of the following which represent the type of the given SQL statement.
     * <ol>
     *   <li>{@link #STATEMENT_SELECT}</li>
     *   <li>{@link #STATEMENT_ABORT}</li>
     *   <li>{@link #STATEMENT_OTHER}</li>
     * </ol>
     * @param sql the SQL statement whose type is returned by this method
     * @return one of the values listed above
     */
    public static int getSqlStatementType(String sql) {
        sql = sql.trim();
        if (sql.length() < 3) {
            return STATEMENT_OTHER;
        }
        String prefixSql = sql.substring(0, 3).toUpperCase(Locale.ROOT);
        if (prefixSql.equals("SEL")) {
            return STATEMENT_SELECT;
        } else if (prefixSql.equals("ROL")) {
            return STATEMENT_ABORT;
        }
        return STATEMENT_OTHER;
    }

    static void appendEscapedSQLString(StringBuilder sb, String sqlString) {
        sb.append('\'');
        sb.append(sqlString.replace("'", "''"));
        sb.append('\'');
    }
}
