package com.example;

import android.database.DatabaseUtils;
import android.os.Build;

public class Compat {
    private final DatabaseUtils utils = null;

    int typeOf(String sql) {
        if (Build.VERSION.SDK_INT < 28) {
            return utils.getSqlStatementType(sql);
        }
        return -1;
    }
}
